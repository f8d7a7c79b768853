use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use dualcheck::algebra::{hom_dim, ModuleRep};
use dualcheck::complex::{BoundedComplex, ChainMap};
use dualcheck::derived::{ext, tor, Strategy as Resolve};
use dualcheck::linalg::{ExactMatrix, Field};
use dualcheck::resolution::{injective_coresolution, projective_resolution, ResolutionWindow};
use dualcheck::samples;

fn field() -> impl Strategy<Value = Field> {
    prop_oneof![Just(Field::Rationals), Just(Field::prime(2).unwrap()), Just(Field::prime(5).unwrap()), Just(Field::prime(7).unwrap())]
}

fn matrix() -> impl Strategy<Value = (Field, ExactMatrix)> {
    (field(), 1usize..5, 1usize..5).prop_flat_map(|(f, r, c)| {
        prop::collection::vec(-3i64..=3, r * c).prop_map(move |xs| {
            let m = ExactMatrix::from_fn(f, r, c, |i, j| f.from_i64(xs[i * c + j]));
            (f, m)
        })
    })
}

fn sample_algebra(i: usize) -> std::sync::Arc<dualcheck::algebra::Algebra> {
    let all = samples::all(Field::Rationals);
    all[i % all.len()].1.clone()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn rank_nullity((_, m) in matrix()) {
        let k = m.kernel_basis();
        prop_assert_eq!(m.rank() + k.cols(), m.cols());
        prop_assert!(m.mul(&k).is_zero());
        prop_assert_eq!(k.rank(), k.cols());
    }

    #[test]
    fn solve_recovers_a_preimage((f, m) in matrix(), seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let x = ExactMatrix::from_fn(f, m.cols(), 1, |_, _| f.random(&mut rng));
        let b = m.mul(&x);
        let y = m.solve(&b).unwrap().expect("b lies in the image");
        prop_assert_eq!(m.mul(&y), b);
    }

    #[test]
    fn transpose_preserves_rank((_, m) in matrix()) {
        prop_assert_eq!(m.rank(), m.transpose().rank());
    }

    #[test]
    fn scalar_text_round_trips(f in field(), n in -50i64..50, d in 1i64..20) {
        if let Ok(s) = f.fraction(n, d) {
            prop_assert_eq!(f.parse(&s.to_text()).unwrap(), s);
        }
    }

    #[test]
    fn random_complexes_square_to_zero(alg in 0usize..4, seed in any::<u64>()) {
        let a = sample_algebra(alg);
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let x = samples::random_complex(&a, 4, 3, &mut rng).unwrap();
        let (lo, hi) = x.support().unwrap();
        for n in lo..hi {
            prop_assert!(x.diff(n + 1).mul(&x.diff(n)).is_zero());
        }
        let chi: i64 = x.homology_dims().iter().map(|&(n, d)| if n % 2 == 0 { d as i64 } else { -(d as i64) }).sum();
        prop_assert_eq!(chi, x.euler_characteristic());
    }

    #[test]
    fn cone_of_identity_is_acyclic(alg in 0usize..4, seed in any::<u64>()) {
        let a = sample_algebra(alg);
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let x = samples::random_complex(&a, 3, 3, &mut rng).unwrap();
        prop_assert!(ChainMap::identity(&x).cone().is_acyclic());
        prop_assert!(ChainMap::identity(&x).is_quasi_isomorphism());
    }

    #[test]
    fn shift_moves_homology(alg in 0usize..4, seed in any::<u64>(), k in -2i32..=2) {
        let a = sample_algebra(alg);
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let x = samples::random_complex(&a, 3, 3, &mut rng).unwrap();
        let shifted: Vec<_> = x.shift(k).homology_dims();
        let expected: Vec<_> = x.homology_dims().into_iter().map(|(n, d)| (n - k, d)).collect();
        prop_assert_eq!(shifted, expected);
    }

    #[test]
    fn resolutions_are_projective_and_quasi_isomorphic(alg in 0usize..4, seed in any::<u64>()) {
        let a = sample_algebra(alg);
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let m = samples::random_module(&a, 4, &mut rng).unwrap();
        let w = ResolutionWindow::new(4).unwrap();
        let p = projective_resolution(&m, w).unwrap();
        for (_, t) in p.complex().terms() {
            prop_assert!(t.left_module().is_projective().unwrap());
        }
        let aug = p.augmentation();
        // a finite resolution is trusted everywhere; clamp to a range that covers its support
        prop_assert!(aug.cone_acyclic_in(p.trusted_from().max(-8), 1));
        let j = injective_coresolution(&m, w).unwrap();
        for (_, t) in j.complex().terms() {
            prop_assert!(t.left_module().is_injective().unwrap());
        }
        prop_assert!(j.coaugmentation().cone_acyclic_in(-1, j.trusted_until().min(8)));
    }

    #[test]
    fn ext_zero_is_hom(alg in 0usize..4, seed in any::<u64>(), strategy in prop_oneof![Just(Resolve::ResolveFirst), Just(Resolve::ResolveSecond)]) {
        let a = sample_algebra(alg);
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let m = samples::random_module(&a, 3, &mut rng).unwrap();
        let n = samples::random_module(&a, 3, &mut rng).unwrap();
        let w = ResolutionWindow::new(3).unwrap();
        let e0 = ext(&BoundedComplex::from_module(&m, 0), &BoundedComplex::from_module(&n, 0), 0, w, strategy).unwrap();
        prop_assert_eq!(e0, hom_dim(&m, &n).unwrap());
    }

    #[test]
    fn tor_zero_is_tensor_dimension(alg in 0usize..4, seed in any::<u64>()) {
        let a = sample_algebra(alg);
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let n = samples::random_module(&a, 3, &mut rng).unwrap();
        let reg = ModuleRep::regular(a.clone(), dualcheck::algebra::Side::Right);
        let w = ResolutionWindow::new(3).unwrap();
        // A ⊗_A N = N
        let t0 = tor(&BoundedComplex::from_module(&reg, 0), &BoundedComplex::from_module(&n, 0), 0, w, Resolve::ResolveFirst).unwrap();
        prop_assert_eq!(t0, n.dim());
        let t1 = tor(&BoundedComplex::from_module(&reg, 0), &BoundedComplex::from_module(&n, 0), 1, w, Resolve::ResolveSecond).unwrap();
        prop_assert_eq!(t1, 0);
    }

    #[test]
    fn short_exact_sequences_add_dimensions(alg in 0usize..4, seed in any::<u64>()) {
        let a = sample_algebra(alg);
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let (k, m, q) = samples::random_short_exact(&a, 4, &mut rng).unwrap();
        prop_assert_eq!(k.dim() + q.dim(), m.dim());
    }
}
