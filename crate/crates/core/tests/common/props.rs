//! Randomised checks shared by the property suite and the acceptance run.
//! Each takes a case count and uses a fixed seed.

use std::sync::OnceLock;

use proptest::prelude::*;
use proptest::test_runner::{Config, RngSeed, TestCaseError, TestRunner};

use minkowski_weights::balance::BalancingSystem;
use minkowski_weights::balance::{
    is_balanced, symmetric_space, weight_space, EchelonBasis, EdgePermutation, WeightVector,
};
use minkowski_weights::field::{format_scalar, parse_scalar};
use minkowski_weights::figure::{render, AlphaChoice, Format, Panel};
use minkowski_weights::io::{format_skeleton, format_weight, parse_skeleton, parse_weight, Validation};
use minkowski_weights::linalg::{reduce, Matrix};
use minkowski_weights::skeleton::{builtin_polytope, linear_symmetry, link_cycle, PolytopeSkeleton, Solid, Vertex};
use minkowski_weights::QuadraticScalar as Q;

use super::approx;

pub const SEED: u64 = 0x5eed_0005;

pub fn runner(cases: u32) -> TestRunner {
    TestRunner::new(Config { cases, rng_seed: RngSeed::Fixed(SEED), failure_persistence: None, ..Config::default() })
}

fn check<S: Strategy>(cases: u32, s: S, f: impl Fn(S::Value) -> Result<(), TestCaseError>) -> Result<(), String> {
    runner(cases).run(&s, f).map_err(|e| e.to_string())
}

pub fn small_scalar() -> impl Strategy<Value = Q> + Clone {
    (-30i64..=30, 1i64..=12, -30i64..=30, 1i64..=12).prop_map(|(a, b, c, d)| Q::from_fracs((a, b), (c, d)))
}

pub fn wide_scalar() -> impl Strategy<Value = Q> {
    (any::<i64>(), 1i64..=i64::MAX, any::<i64>(), 1i64..=i64::MAX)
        .prop_map(|(a, b, c, d)| Q::from_fracs((a, b), (c, d)))
}

/// Values `p - q√5` with `p/q` close to `√5`, so the two parts nearly cancel.
pub fn near_cancelling() -> impl Strategy<Value = Q> {
    (1usize..=24, any::<bool>(), -2i64..=2).prop_map(|(k, flip, nudge)| {
        // convergents of √5 = [2; 4, 4, 4, ...]
        let (mut p0, mut q0, mut p1, mut q1) = (1i64, 0i64, 2i64, 1i64);
        for _ in 1..k {
            let (p2, q2) = (4 * p1 + p0, 4 * q1 + q0);
            (p0, q0, p1, q1) = (p1, q1, p2, q2);
        }
        let x = Q::from_fracs((p1 + nudge * (k as i64 % 2), 1), (-q1, 1));
        if flip {
            -x
        } else {
            x
        }
    })
}

fn solids() -> impl Strategy<Value = Solid> {
    prop::sample::select(Solid::ALL.to_vec())
}

struct Cached {
    skeleton: PolytopeSkeleton<Q>,
    basis: EchelonBasis<Q>,
}

fn cached(solid: Solid) -> &'static Cached {
    static CACHE: OnceLock<Vec<Cached>> = OnceLock::new();
    let all = CACHE.get_or_init(|| {
        Solid::ALL
            .iter()
            .map(|&s| {
                let skeleton = builtin_polytope(s);
                let basis = weight_space(&skeleton).unwrap();
                Cached { skeleton, basis }
            })
            .collect()
    });
    &all[Solid::ALL.iter().position(|&s| s == solid).unwrap()]
}

fn combination(basis: &EchelonBasis<Q>, coeffs: &[Q]) -> WeightVector<Q> {
    basis.combination(&coeffs[..basis.dim()])
}

/// Sums and multiples of balanced weights are balanced.
pub fn closure(cases: u32) -> Result<(), String> {
    let coeffs = prop::collection::vec(small_scalar(), 9);
    check(cases, (solids(), coeffs.clone(), coeffs, small_scalar()), |(solid, a, b, s)| {
        let c = cached(solid);
        let (u, v) = (combination(&c.basis, &a), combination(&c.basis, &b));
        prop_assert!(is_balanced(&c.skeleton, &u.add(&v)).is_balanced());
        prop_assert!(is_balanced(&c.skeleton, &u.scale(&s)).is_balanced());
        Ok(())
    })
}

/// A rotation or reflection taking the flag at `v` to a flag at `w`.
pub fn random_symmetry(skel: &PolytopeSkeleton<Q>, v: usize, w: usize, turn: usize, mirror: bool) -> Vec<usize> {
    let (lv, lw) = (link_cycle(skel, v).unwrap(), link_cycle(skel, w).unwrap());
    let k = lw.len();
    let (a, b) = (lw[turn % k], lw[(turn + 1) % k]);
    let to = if mirror { [w, b, a] } else { [w, a, b] };
    linear_symmetry(skel, [v, lv[0], lv[1]], to).expect("regular solids are flag-transitive")
}

/// Basis vectors of the weight space and of symmetric subspaces are
/// balanced, and symmetric subspaces sit inside the weight space.
pub fn bases_balanced(cases: u32) -> Result<(), String> {
    let strategy = (solids(), any::<prop::sample::Index>(), any::<prop::sample::Index>(), 0usize..5, any::<bool>());
    check(cases, strategy, |(solid, v, w, turn, mirror)| {
        let c = cached(solid);
        let n = c.skeleton.vertex_count();
        for b in c.basis.vectors() {
            prop_assert!(is_balanced(&c.skeleton, b).is_balanced());
        }
        let perm = random_symmetry(&c.skeleton, v.index(n), w.index(n), turn, mirror);
        let g = EdgePermutation::from_vertex_permutation(&c.skeleton, &perm).unwrap();
        let sym = symmetric_space(&c.skeleton, std::slice::from_ref(&g)).unwrap();
        for b in sym.vectors() {
            prop_assert!(is_balanced(&c.skeleton, b).is_balanced());
            prop_assert_eq!(&b.pull_back(g.image()), b);
        }
        prop_assert!(sym.is_subspace_of(&c.basis));
        Ok(())
    })
}

/// Reducing the assembled system after shuffling its rows gives the same
/// reduced echelon form.
pub fn echelon_canonical(cases: u32) -> Result<(), String> {
    let strategy = (solids(), any::<u64>());
    check(cases, strategy, |(solid, key)| {
        let c = cached(solid);
        let m = BalancingSystem::assemble(&c.skeleton).unwrap().into_matrix();
        let mut rows: Vec<(u64, Vec<Q>)> = m
            .rows()
            .iter()
            .enumerate()
            .map(|(i, r)| ((i as u64 + 1).wrapping_mul(key | 1).rotate_left(17) ^ key, r.clone()))
            .collect();
        rows.sort_by_key(|(k, _)| *k);
        let shuffled = Matrix::from_rows(m.col_count(), rows.into_iter().map(|(_, r)| r).collect());
        prop_assert_eq!(shuffled.reduced(), m.reduced());
        prop_assert_eq!(shuffled.nullspace(), m.nullspace());
        Ok(())
    })
}

/// Canonical reduced form of small random matrices does not depend on row order.
pub fn echelon_canonical_small(cases: u32) -> Result<(), String> {
    let strategy = (1usize..=5, 1usize..=6).prop_flat_map(|(r, c)| {
        (
            prop::collection::vec(
                prop::collection::vec(prop_oneof![3 => Just(Q::from_int(0)), 2 => small_scalar()], c),
                r,
            ),
            Just(c),
        )
            .prop_flat_map(|(rows, c)| (Just(rows.clone()).prop_shuffle(), Just(rows), Just(c)))
    });
    check(cases, strategy, |(shuffled, rows, c)| {
        prop_assert_eq!(reduce(shuffled, c), reduce(rows, c));
        Ok(())
    })
}

/// Scalars survive format then parse, with or without spaces.
pub fn scalar_round_trip(cases: u32) -> Result<(), String> {
    check(cases, prop_oneof![small_scalar(), wide_scalar()], |x| {
        let text = format_scalar(&x);
        prop_assert_eq!(&parse_scalar(&text).unwrap(), &x);
        let spaced = text.replace('+', " + ").replacen('-', " - ", 2).replace('r', " r");
        prop_assert_eq!(&parse_scalar(&spaced).unwrap(), &x);
        prop_assert_eq!(format_scalar(&parse_scalar(&text).unwrap()), text);
        Ok(())
    })
}

/// Skeletons and weights survive write then read.
pub fn file_round_trip(cases: u32) -> Result<(), String> {
    let scales = prop::collection::vec((1i64..=9, 1i64..=9, 0i64..=3, 1i64..=4), 20);
    let strategy = (solids(), scales, prop::collection::vec(small_scalar(), 30), "[a-z][a-z0-9_]{0,6}");
    check(cases, strategy, |(solid, scales, values, prefix)| {
        let base = builtin_polytope(solid);
        // positive rescaling of every ray and renaming keeps the fan
        let vertices = base
            .vertices()
            .iter()
            .zip(&scales)
            .enumerate()
            .map(|(i, (v, &(a, b, c, d)))| Vertex {
                name: format!("{prefix}{i}"),
                position: v.position.scale(&Q::from_fracs((a, b), (c, d))),
            })
            .collect();
        let edges = base.edges().iter().map(|e| (e.a, e.b)).collect();
        let skel = PolytopeSkeleton::new(vertices, edges, None).unwrap();
        let back = parse_skeleton(&format_skeleton(&skel), Validation::Strict)
            .map_err(|e| TestCaseError::fail(e.to_string()))?;
        prop_assert_eq!(&back.skeleton, &skel);
        let w = WeightVector::new(values[..skel.edge_count()].to_vec());
        prop_assert_eq!(parse_weight(&format_weight(&skel, &w), &skel).unwrap(), w);
        Ok(())
    })
}

/// `sign()` agrees with a 60-digit evaluation.
pub fn sign_matches_reference(cases: u32) -> Result<(), String> {
    check(cases, prop_oneof![small_scalar(), wide_scalar(), near_cancelling()], |x| {
        let r = approx(&x);
        prop_assert!(num_traits::Zero::is_zero(&x) || !r.below(50), "reference too close to zero for {}", x);
        prop_assert_eq!(x.sign(), r.signum(), "sign of {}", x);
        Ok(())
    })
}

/// Rendering twice gives identical bytes.
pub fn emission_deterministic(cases: u32) -> Result<(), String> {
    let strategy = (any::<bool>(), any::<bool>(), any::<bool>());
    check(cases, strategy, |(left, printed, tikz)| {
        let panel = if left { Panel::Left } else { Panel::Right };
        let alpha = if printed { AlphaChoice::Printed } else { AlphaChoice::Corrected };
        let format = if tikz { Format::Tikz } else { Format::Dot };
        let a = render(panel, alpha, format).unwrap().text;
        let b = render(panel, alpha, format).unwrap().text;
        prop_assert_eq!(a, b);
        Ok(())
    })
}

/// The direct vertex check agrees with the assembled matrix.
pub fn balanced_iff_annihilated(cases: u32) -> Result<(), String> {
    let strategy = (
        solids(),
        prop::collection::vec(small_scalar(), 9),
        any::<prop::sample::Index>(),
        small_scalar(),
        any::<bool>(),
    );
    check(cases, strategy, |(solid, coeffs, edge, bump, perturb)| {
        let c = cached(solid);
        let mut w = combination(&c.basis, &coeffs);
        if perturb {
            let e = edge.index(w.len());
            w.set(e, w.get(e).clone() + bump);
        }
        let system = BalancingSystem::assemble(&c.skeleton).unwrap();
        prop_assert_eq!(is_balanced(&c.skeleton, &w).is_balanced(), system.annihilates(&w));
        prop_assert_eq!(system.annihilates(&w), c.basis.contains(&w));
        Ok(())
    })
}
