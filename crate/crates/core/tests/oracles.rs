mod common;

use common::{classical_partitions, gcd_u, q, to_u128, Fam, MatrixOrbit, Sys, Q};
use goldie::lattice::{all_schur_classes, in_root_lattice, schur_class_of};
use goldie::nilorbit::{centralizer_dim, h_and_grading, reductive_centralizer, validate_partition, ClassicalFamily};
use goldie::repdim::{d_psi, enumerate_dominant_in_class, weyl_dim, DPsiConfig};
use goldie::rootsys::{RootSystem, Weight};
use num_bigint::BigUint;
use num_traits::{ToPrimitive, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn name(factors: &[(Fam, usize)]) -> String {
    factors
        .iter()
        .map(|(f, r)| format!("{f:?}{r}"))
        .collect::<Vec<_>>()
        .join("x")
}

fn pair(factors: &[(Fam, usize)]) -> (Sys, RootSystem) {
    (Sys::new(factors), name(factors).parse().unwrap())
}

fn random_dominant(rs: &RootSystem, rng: &mut ChaCha8Rng, max: u64) -> Weight {
    let c: Vec<u64> = (0..rs.rank()).map(|_| rng.gen_range(0..=max)).collect();
    rs.from_fundamental_ints(&c).unwrap()
}

const SMALL: &[&[(Fam, usize)]] = &[
    &[(Fam::A, 1)],
    &[(Fam::A, 2)],
    &[(Fam::A, 3)],
    &[(Fam::B, 2)],
    &[(Fam::B, 3)],
    &[(Fam::C, 2)],
    &[(Fam::C, 3)],
    &[(Fam::D, 3)],
    &[(Fam::A, 1), (Fam::B, 2)],
];

const RANK_FOUR: &[&[(Fam, usize)]] = &[
    &[(Fam::A, 4)],
    &[(Fam::B, 4)],
    &[(Fam::C, 4)],
    &[(Fam::D, 4)],
    &[(Fam::A, 2), (Fam::C, 2)],
    &[(Fam::A, 1), (Fam::A, 1), (Fam::A, 2)],
];

#[test]
fn centralizers_match_matrix_oracle() {
    for (family, symplectic, sizes) in [
        (ClassicalFamily::Sp, true, vec![2, 4, 6, 8]),
        (ClassicalFamily::So, false, vec![3, 4, 5, 6, 7, 8]),
    ] {
        for n in sizes {
            let parts = classical_partitions(symplectic, n);
            assert!(!parts.is_empty());
            for p in parts {
                let m = MatrixOrbit::new(symplectic, &p);
                assert!(m.is_valid(), "{p:?}");
                let lib = validate_partition(family, &p, n).unwrap();
                assert_eq!(centralizer_dim(&lib), m.centralizer_dim(), "{family} {p:?}");
                assert_eq!(reductive_centralizer(&lib).dim(), m.reductive_dim(), "{family} {p:?}");
                if family.root_system(n).is_ok() {
                    let g = h_and_grading(&lib).unwrap();
                    assert_eq!(g.dims, m.grading(), "{family} {p:?}");
                }
            }
        }
    }
}

#[test]
fn library_partitions_match_oracle_enumeration() {
    for n in 1..=12 {
        for (family, symplectic) in [(ClassicalFamily::Sp, true), (ClassicalFamily::So, false)] {
            if symplectic && n % 2 == 1 {
                continue;
            }
            let lib: Vec<Vec<usize>> = goldie::nilorbit::all_partitions(family, n)
                .into_iter()
                .map(|p| p.parts().to_vec())
                .collect();
            assert_eq!(lib, classical_partitions(symplectic, n), "{family} {n}");
        }
    }
}

#[test]
fn weyl_dim_matches_freudenthal() {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    for factors in SMALL {
        let (sys, rs) = pair(factors);
        for _ in 0..6 {
            let w = random_dominant(&rs, &mut rng, 2);
            let lib = weyl_dim(&rs, &w).unwrap();
            let oracle = sys.freudenthal_dim(&w.0);
            assert_eq!(Q::from_integer(lib.into()), oracle, "{rs} {w}");
        }
    }
}

#[test]
fn weyl_dim_is_an_integer_for_random_weights() {
    let mut rng = ChaCha8Rng::seed_from_u64(1000);
    let families = [Fam::A, Fam::B, Fam::C, Fam::D];
    let mut done = 0;
    while done < 1000 {
        let f = families[rng.gen_range(0..4)];
        let r = rng.gen_range(1..=6);
        let min = match f {
            Fam::A => 1,
            Fam::B | Fam::C => 2,
            Fam::D => 3,
        };
        if r < min {
            continue;
        }
        let (sys, rs) = pair(&[(f, r)]);
        let w = random_dominant(&rs, &mut rng, 4);
        let coeffs: Vec<u64> = sys
            .fundamental_coefficients(&w.0)
            .iter()
            .map(|c| to_u128(c) as u64)
            .collect();
        assert_eq!(rs.from_fundamental_ints(&coeffs).unwrap(), w);
        let product = sys.weyl_product(&w.0);
        assert!(product.is_integer(), "{rs} {w}: {product}");
        assert_eq!(Q::from_integer(weyl_dim(&rs, &w).unwrap().into()), product);
        done += 1;
    }
}

#[test]
fn orbit_stabilizer_against_brute_force() {
    let mut rng = ChaCha8Rng::seed_from_u64(4);
    for factors in SMALL.iter().chain(RANK_FOUR) {
        let (sys, rs) = pair(factors);
        let w_order = sys.orbit(&sys.rho()).len();
        assert_eq!(rs.weyl_group_order(), BigUint::from(w_order), "{rs}");
        for _ in 0..5 {
            let mut c: Vec<u64> = (0..rs.rank()).map(|_| rng.gen_range(0..=2)).collect();
            // keep some walls so stabilizers are non-trivial
            let k = rng.gen_range(0..c.len());
            c[k] = 0;
            let w = rs.from_fundamental_ints(&c).unwrap();
            let orbit = sys.orbit(&w.0);
            let size = rs.orbit_size(&w).unwrap();
            let stab = rs.stabilizer_order(&w).unwrap();
            assert_eq!(size, BigUint::from(orbit.len()), "{rs} {w}");
            assert_eq!(&size * &stab, rs.weyl_group_order());
            for v in orbit.iter().take(12) {
                let v = rs.weight(v.clone()).unwrap();
                assert_eq!(rs.dominant_representative(&v).unwrap(), w);
                assert_eq!(sys.dominant(&v.0), w.0);
            }
        }
    }
}

#[test]
fn class_enumeration_matches_box_scan() {
    for (factors, level) in [
        (&[(Fam::A, 2)][..], 4),
        (&[(Fam::A, 3)][..], 4),
        (&[(Fam::B, 2)][..], 4),
        (&[(Fam::B, 3)][..], 3),
        (&[(Fam::C, 3)][..], 3),
        (&[(Fam::D, 4)][..], 3),
        (&[(Fam::A, 1), (Fam::C, 2)][..], 3),
    ] {
        let (sys, rs) = pair(factors);
        for class in all_schur_classes(&rs) {
            let lib: std::collections::BTreeSet<Vec<Q>> = enumerate_dominant_in_class(&rs, &class, level)
                .into_iter()
                .map(|w| w.0)
                .collect();
            let oracle = sys.box_scan(&class.representative().0, level as i64);
            assert_eq!(lib, oracle, "{rs} class ({})", class.representative());
        }
    }
}

#[test]
fn class_counts_and_invariance() {
    let mut rng = ChaCha8Rng::seed_from_u64(6);
    for f in [Fam::A, Fam::B, Fam::C, Fam::D] {
        for r in 1..=6 {
            let Ok(rs) = name(&[(f, r)]).parse::<RootSystem>() else {
                continue;
            };
            let sys = Sys::new(&[(f, r)]);
            let classes = all_schur_classes(&rs);
            let expected = match f {
                Fam::A => r + 1,
                Fam::B | Fam::C => 2,
                Fam::D => 4,
            };
            assert_eq!(classes.len(), expected, "{rs}");
            // representatives are pairwise inequivalent
            for (i, a) in classes.iter().enumerate() {
                for b in &classes[i + 1..] {
                    let d: Vec<Q> = a.representative().0.iter().zip(&b.representative().0).map(|(x, y)| x - y).collect();
                    assert!(!sys.in_root_lattice(&d));
                }
            }
            let roots: Vec<_> = rs.roots();
            for _ in 0..20 {
                let w = random_dominant(&rs, &mut rng, 3);
                let class = schur_class_of(&rs, &w).unwrap();
                let diff: Vec<Q> = w.0.iter().zip(&class.representative().0).map(|(x, y)| x - y).collect();
                assert!(sys.in_root_lattice(&diff), "{rs} {w}");
                assert!(in_root_lattice(&rs, &Weight(diff)).unwrap());
                let a = &roots[rng.gen_range(0..roots.len())];
                let shifted = rs.normalize(&(&w + &a.vector));
                assert_eq!(schur_class_of(&rs, &shifted).unwrap(), class);
            }
        }
    }
}

#[test]
fn representatives_have_minimal_height() {
    for f in [Fam::A, Fam::B, Fam::C, Fam::D] {
        for r in 2..=4 {
            let Ok(rs) = name(&[(f, r)]).parse::<RootSystem>() else {
                continue;
            };
            for class in all_schur_classes(&rs) {
                let rep = class.representative();
                assert!(rs.is_minuscule(rep).unwrap());
                let weights = enumerate_dominant_in_class(&rs, &class, 3);
                let min = weights.iter().map(|w| rs.height(w)).min().unwrap();
                assert_eq!(rs.height(rep), min, "{rs}");
                assert_eq!(&weights[0], rep);
            }
        }
    }
}

#[test]
fn d_psi_is_monotone_and_divides_further_dims() {
    for spec in ["A2", "A3", "A4", "B2", "B3", "C3", "D4", "A1xA1", "A1xC2"] {
        let rs: RootSystem = spec.parse().unwrap();
        for class in all_schur_classes(&rs) {
            let mut previous: Option<BigUint> = None;
            for bound in 0..=5 {
                let config = DPsiConfig {
                    bound,
                    window: 2,
                    ..DPsiConfig::default()
                };
                let d = d_psi(&rs, &class, &config).unwrap();
                if let Some(p) = &previous {
                    assert!((p % &d.value).is_zero(), "{rs}: {} then {}", p, d.value);
                }
                // every module of the class up to two levels past the scan
                for w in enumerate_dominant_in_class(&rs, &class, d.bound_used + 2) {
                    assert!((weyl_dim(&rs, &w).unwrap() % &d.value).is_zero(), "{rs} {w}");
                }
                previous = Some(d.value);
            }
        }
    }
}

#[test]
fn sl4_wedge_class_gcd_by_brute_force() {
    let (sys, rs) = pair(&[(Fam::A, 3)]);
    let rep = vec![q(1), q(1), q(0), q(0)];
    for level in 4..=6 {
        let g = sys
            .box_scan(&rep, level)
            .iter()
            .map(|w| to_u128(&sys.freudenthal_dim(w)))
            .fold(0, gcd_u);
        assert_eq!(g, 2);
    }
    let class = schur_class_of(&rs, &rs.weight(rep).unwrap()).unwrap();
    let d = d_psi(&rs, &class, &DPsiConfig::default()).unwrap();
    assert_eq!(d.value.to_u64(), Some(2));
}

#[test]
fn minuscule_iff_single_orbit() {
    let mut rng = ChaCha8Rng::seed_from_u64(9);
    for spec in ["A1", "A3", "A5", "B2", "B4", "C3", "C5", "D4", "D5", "A2xB3"] {
        let rs: RootSystem = spec.parse().unwrap();
        let mut weights = rs.fundamental_weights();
        weights.push(rs.zero_weight());
        weights.extend((0..15).map(|_| random_dominant(&rs, &mut rng, 2)));
        for w in weights {
            let single = weyl_dim(&rs, &w).unwrap() == rs.orbit_size(&w).unwrap();
            assert_eq!(rs.is_minuscule(&w).unwrap(), single, "{rs} {w}");
        }
    }
}
