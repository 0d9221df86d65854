//! Tropical double description: the extreme rays of `{x | A x ≤ B x}`.
//!
//! Starting from the canonical basis, inequalities are added one at a time.
//! If `G` holds the extreme rays of the current cone, the cone cut by
//! `a x ≤ b x` is generated by the members `g` of `G` with `a g ≤ b g`
//! together with the combinations `(a h) g ⊕ (b g) h` for `a g ≤ b g` and
//! `a h > b h`. The first kind stay extreme; the combinations are filtered
//! by an extremality test, either the tangent hypergraph one
//! ([`Method::Hypergraph`]) or residuation against the other candidates
//! ([`Method::Residuation`]).

use num::bigint::BigUint;
use rayon::prelude::*;

use crate::cone::{member, GeneratorSet, IneqSystem};
use crate::error::{Error, Result};
use crate::extremality::is_extreme;
use crate::instances::canonical_basis;
use crate::maxplus::{row_product, Scalar, Vector};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum Method {
    #[default]
    Hypergraph,
    Residuation,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DdOptions {
    pub method: Method,
    /// Worker threads for the extremality tests of one step; `1` runs
    /// everything on the calling thread.
    pub jobs: usize,
}

impl Default for DdOptions {
    fn default() -> Self {
        DdOptions { method: Method::Hypergraph, jobs: 1 }
    }
}

/// One elimination step.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StepRecord {
    /// Original index of the row added.
    pub row: usize,
    pub le_count: usize,
    pub gt_count: usize,
    /// Combinations formed, `le_count · gt_count`.
    pub generated: usize,
    /// Combinations kept as new extreme rays.
    pub kept: usize,
    /// Size of the generator set after the step.
    pub size_after: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct EliminationTrace {
    pub dim: usize,
    pub steps: Vec<StepRecord>,
}

impl EliminationTrace {
    /// Sizes of the generator sets the steps started from; the first is the
    /// canonical basis.
    pub fn intermediate_sizes(&self) -> Vec<usize> {
        let mut sizes = vec![self.dim];
        sizes.extend(self.steps.iter().map(|s| s.size_after));
        if !self.steps.is_empty() {
            sizes.pop();
        }
        sizes
    }

    /// Mean of [`Self::intermediate_sizes`].
    pub fn mean_intermediate(&self) -> f64 {
        let sizes = self.intermediate_sizes();
        sizes.iter().sum::<usize>() as f64 / sizes.len() as f64
    }

    pub fn final_count(&self) -> usize {
        self.steps.last().map_or(self.dim, |s| s.size_after)
    }
}

#[derive(Clone, Debug)]
pub struct DdOutput {
    pub generators: GeneratorSet,
    pub trace: EliminationTrace,
}

/// A combination examined during a step, as reported to an observer.
#[derive(Debug)]
pub struct CandidateEvent<'a> {
    /// Rows eliminated so far, including the current one, in the order
    /// they were added.
    pub system: &'a IneqSystem,
    /// The normalized combination.
    pub candidate: &'a Vector,
    /// All candidates of the step: the kept rays first, then the
    /// deduplicated combinations. They generate the new cone.
    pub pool: &'a [Vector],
    /// Verdict of the method in use.
    pub extreme: bool,
}

/// `(a h) ⊗ g ⊕ (b g) ⊗ h`, for `a g ≤ b g` and `a h > b h`. The result
/// satisfies `a x ≤ b x` (with equality).
pub fn combine(g: &Vector, h: &Vector, a: &[Scalar], b: &[Scalar]) -> Result<Vector> {
    for (row, x) in [(a, g), (b, g), (a, h)] {
        if row.len() != x.len() {
            return Err(Error::DimensionMismatch { expected: x.len(), found: row.len() });
        }
    }
    let (ag, bg) = (row_product(a, g), row_product(b, g));
    let (ah, bh) = (row_product(a, h), row_product(b, h));
    if ag > bg {
        return Err(Error::CombinePrecondition("a g ≤ b g is required"));
    }
    if ah <= bh {
        return Err(Error::CombinePrecondition("a h > b h is required"));
    }
    Ok(g.scale(&ah).oplus(&h.scale(&bg)))
}

fn split(g: &GeneratorSet, a: &[Scalar], b: &[Scalar]) -> (Vec<Vector>, Vec<Vector>) {
    g.iter().cloned().partition(|x| row_product(a, x) <= row_product(b, x))
}

/// The remaining row minimizing `|G≤| · |G>|`; ties go to the lowest index.
pub fn order_heuristic(rows: &[usize], system: &IneqSystem, g: &GeneratorSet) -> usize {
    assert!(!rows.is_empty(), "no row left");
    let cost = |k: usize| {
        let (a, b) = system.row(k);
        let le = g.iter().filter(|x| row_product(a, x) <= row_product(b, x)).count();
        le * (g.len() - le)
    };
    *rows.iter().min_by_key(|&&k| (cost(k), k)).expect("nonempty")
}

/// Extreme rays of `{x ∈ cone(G) | a x ≤ b x}`, where `G` holds the
/// extreme rays of the cone of `system` without its last row and `(a, b)` is
/// that last row.
pub fn intersect_halfspace(g: &GeneratorSet, a: &[Scalar], b: &[Scalar], system: &IneqSystem) -> Result<GeneratorSet> {
    Ok(step(g, a, b, system, &DdOptions::default(), None, None)?.0)
}

type Observer<'o> = Option<&'o mut dyn FnMut(&CandidateEvent)>;

fn step(
    g: &GeneratorSet,
    a: &[Scalar],
    b: &[Scalar],
    system: &IneqSystem,
    options: &DdOptions,
    pool: Option<&rayon::ThreadPool>,
    observer: Observer,
) -> Result<(GeneratorSet, StepRecord)> {
    if a.len() != g.dim() || b.len() != g.dim() || system.dim() != g.dim() {
        return Err(Error::DimensionMismatch { expected: g.dim(), found: a.len() });
    }
    let (le, gt) = split(g, a, b);
    let mut candidates = GeneratorSet::from_vectors(g.dim(), le.iter().cloned())?;
    let kept_before = candidates.len();
    for x in &le {
        for y in &gt {
            candidates.insert(combine(x, y, a, b)?)?;
        }
    }
    let all = candidates.vectors();
    let combos = &all[kept_before..];

    let verdicts: Vec<bool> = match options.method {
        Method::Hypergraph => {
            let test = |h: &Vector| is_extreme(h, system);
            match pool {
                Some(pool) => pool.install(|| combos.par_iter().map(test).collect::<Result<_>>())?,
                None => combos.iter().map(test).collect::<Result<_>>()?,
            }
        }
        Method::Residuation => {
            // drop non-extreme candidates as soon as they are found; the
            // remaining ones still generate the same cone. Candidates are
            // pairwise non-proportional, so "the others" are just j != i.
            let mut alive = vec![true; all.len()];
            for i in kept_before..all.len() {
                let others = all.iter().zip(&alive).enumerate().filter(|&(j, (_, &on))| on && j != i);
                if member(others.map(|(_, (v, _))| v), &all[i])? {
                    alive[i] = false;
                }
            }
            alive[kept_before..].to_vec()
        }
    };

    if let Some(observer) = observer {
        for (h, &extreme) in combos.iter().zip(&verdicts) {
            observer(&CandidateEvent { system, candidate: h, pool: all, extreme });
        }
    }

    let mut next = GeneratorSet::from_vectors(g.dim(), le)?;
    let mut kept = 0;
    for (h, &extreme) in combos.iter().zip(&verdicts) {
        if extreme {
            next.insert(h.clone())?;
            kept += 1;
        }
    }
    let record = StepRecord {
        row: usize::MAX,
        le_count: kept_before,
        gt_count: gt.len(),
        generated: kept_before * gt.len(),
        kept,
        size_after: next.len(),
    };
    debug_assert!(record.kept <= record.generated);
    Ok((next, record))
}

/// Extreme rays of the cone of `system`, one normalized vector per ray.
pub fn compute_extreme(system: &IneqSystem) -> GeneratorSet {
    run(system, &DdOptions::default(), None).expect("consistent shapes").generators
}

/// [`compute_extreme`] with residuation as the extremality test.
pub fn compute_extreme_residuation(system: &IneqSystem) -> GeneratorSet {
    let options = DdOptions { method: Method::Residuation, jobs: 1 };
    run(system, &options, None).expect("consistent shapes").generators
}

/// The full driver, with a per-step trace and an optional observer called
/// on every combination examined.
pub fn run(system: &IneqSystem, options: &DdOptions, mut observer: Observer) -> Result<DdOutput> {
    let d = system.dim();
    if d == 0 {
        return Err(Error::OutOfRange("dimension must be at least 1".into()));
    }
    let threads = match options.jobs {
        0 | 1 => None,
        jobs => Some(
            rayon::ThreadPoolBuilder::new()
                .num_threads(jobs)
                .build()
                .map_err(|e| Error::InvalidSpec(format!("thread pool: {e}")))?,
        ),
    };
    let mut g = canonical_basis(d);
    let mut trace = EliminationTrace { dim: d, steps: Vec::new() };
    let mut remaining: Vec<usize> = (0..system.len()).collect();
    let mut prefix = IneqSystem::empty(d);
    while !remaining.is_empty() {
        let k = order_heuristic(&remaining, system, &g);
        remaining.retain(|&r| r != k);
        let (a, b) = system.row(k);
        prefix.push_row(a, b)?;
        let obs = observer.as_mut().map(|o| &mut **o as &mut dyn FnMut(&CandidateEvent));
        let (next, mut record) = step(&g, a, b, &prefix, options, threads.as_ref(), obs)?;
        record.row = k;
        trace.steps.push(record);
        g = next;
    }
    Ok(DdOutput { generators: g, trace })
}

/// `U(n, d) = C(n − ⌊(d+1)/2⌋, n − d) + C(n − ⌊(d+2)/2⌋, n − d)`, the
/// maximal number of vertices of a `d`-polytope with `n` facets.
pub fn upper_bound(n: usize, d: usize) -> Result<BigUint> {
    if d == 0 || n < d {
        return Err(Error::OutOfRange(format!("U(n, d) needs n ≥ d ≥ 1, got n = {n}, d = {d}")));
    }
    let k = BigUint::from(n - d);
    let first = num::integer::binomial(BigUint::from(n - d.div_ceil(2)), k.clone());
    let second = num::integer::binomial(BigUint::from(n - (d + 2) / 2), k);
    Ok(first + second)
}

/// Bound on the number of extreme rays of a cone given by `n` inequalities
/// in dimension `d ≥ 2`: `U(n + d, d − 1)`.
pub fn tropical_bound(n: usize, d: usize) -> Result<BigUint> {
    if d < 2 {
        return Err(Error::OutOfRange(format!("the bound needs d ≥ 2, got d = {d}")));
    }
    upper_bound(n + d, d - 1)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cone::member;
    use crate::extremality::is_extreme_oracle;
    use crate::instances::fixtures::*;
    use crate::instances::{random_system, RandomSpec};
    use proptest::prelude::*;

    const B: Option<i64> = None;

    fn v(entries: &[Option<i64>]) -> Vector {
        Vector::from_ints(entries)
    }

    fn same_rays(set: &GeneratorSet, expected: &[Vector]) -> bool {
        let expected = GeneratorSet::from_vectors(set.dim(), expected.iter().cloned()).unwrap();
        set.len() == expected.len() && set.same_rays(&expected)
    }

    #[test]
    fn combine_examples() {
        let (a, b) = example_cut();
        let gens = example_cone_rays();
        let g0 = &gens[0];
        let expect = |x: i64| Vector::new(vec![Scalar::from_int(x), Scalar::from_ratio(5, 2), Scalar::from_int(0)]);
        assert_eq!(combine(&gens[1], g0, &a, &b).unwrap(), expect(-2));
        assert_eq!(combine(&gens[2], g0, &a, &b).unwrap(), expect(2));
        assert_eq!(combine(&gens[3], g0, &a, &b).unwrap(), expect(0));
        assert!(matches!(combine(g0, &gens[1], &a, &b), Err(Error::CombinePrecondition(_))));
        assert!(matches!(combine(&gens[1], &gens[2], &a, &b), Err(Error::CombinePrecondition(_))));
    }

    #[test]
    fn halfspace_step_keeps_only_the_extreme_combination() {
        let (a, b) = example_cut();
        let g = GeneratorSet::from_vectors(3, example_cone_rays()).unwrap();
        let out = intersect_halfspace(&g, &a, &b, &example_cone_cut()).unwrap();
        let gens = example_cone_rays();
        let h10 = Vector::new(vec![Scalar::from_int(-2), Scalar::from_ratio(5, 2), Scalar::from_int(0)]);
        assert!(same_rays(&out, &[gens[1].clone(), gens[2].clone(), gens[3].clone(), h10]));
    }

    #[test]
    fn trivial_halfspaces() {
        let g = GeneratorSet::from_vectors(3, example_cone_rays()).unwrap();
        let s = example_cone();
        // x1 ≤ x1 ⊕ x2: every generator satisfies it
        let a = v(&[Some(0), B, B]).into_entries();
        let b = v(&[Some(0), Some(0), B]).into_entries();
        let mut full = s.clone();
        full.push_row(&a, &b).unwrap();
        assert!(intersect_halfspace(&g, &a, &b, &full).unwrap().same_rays(&g));
        // x1 ⊕ x2 ⊕ x3 ≤ -inf: only the zero vector survives
        let a = v(&[Some(0), Some(0), Some(0)]).into_entries();
        let b = Vector::bottom(3).into_entries();
        let mut full = s.clone();
        full.push_row(&a, &b).unwrap();
        assert!(intersect_halfspace(&g, &a, &b, &full).unwrap().is_empty());
    }

    #[test]
    fn example_cone_has_four_rays() {
        for out in [compute_extreme(&example_cone()), compute_extreme_residuation(&example_cone())] {
            assert_eq!(out.len(), 4);
            assert!(same_rays(&out, &example_cone_rays()));
        }
    }

    #[test]
    fn base_case_and_diagonal() {
        let e = compute_extreme(&IneqSystem::empty(3));
        assert_eq!(e.canonical(), canonical_basis(3).canonical());
        assert_eq!(compute_extreme_residuation(&IneqSystem::empty(3)).canonical(), e.canonical());
        let diagonal = IneqSystem::from_rows(
            2,
            vec![
                (v(&[Some(0), B]).into_entries(), v(&[B, Some(0)]).into_entries()),
                (v(&[B, Some(0)]).into_entries(), v(&[Some(0), B]).into_entries()),
            ],
        )
        .unwrap();
        assert_eq!(compute_extreme(&diagonal).vectors(), &[v(&[Some(0), Some(0)])]);
    }

    #[test]
    fn heuristic_examples() {
        let s = example_cone_cut();
        let g = GeneratorSet::from_vectors(3, example_cone_rays()).unwrap();
        // the original rows hold on all generators; the lowest index wins
        assert_eq!(order_heuristic(&[3, 1, 4], &s, &g), 1);
        assert_eq!(order_heuristic(&[4], &s, &g), 4);
        // on the canonical basis: row 0 (x3 ≤ x1 + 2) fails only on ε3
        let e = canonical_basis(3);
        let costs: Vec<usize> = (0..4)
            .map(|k| {
                let (a, b) = s.row(k);
                let le = e.iter().filter(|x| row_product(a, x) <= row_product(b, x)).count();
                le * (3 - le)
            })
            .collect();
        let best = (0..4).min_by_key(|&k| (costs[k], k)).unwrap();
        assert_eq!(order_heuristic(&[0, 1, 2, 3], &s, &e), best);
    }

    #[test]
    fn bound_examples() {
        assert_eq!(upper_bound(7, 2).unwrap(), BigUint::from(7u32));
        assert_eq!(tropical_bound(4, 3).unwrap(), BigUint::from(7u32));
        for d in 2..10 {
            assert_eq!(upper_bound(d, d).unwrap(), BigUint::from(2u32));
        }
        for n in 2..20 {
            assert_eq!(upper_bound(n, 2).unwrap(), BigUint::from(n));
        }
        assert!(upper_bound(2, 3).is_err());
        assert!(upper_bound(3, 0).is_err());
        assert!(tropical_bound(3, 1).is_err());
    }

    #[test]
    fn trace_records_steps() {
        let out = run(&example_cone(), &DdOptions::default(), None).unwrap();
        assert_eq!(out.trace.steps.len(), 4);
        assert_eq!(out.trace.final_count(), 4);
        assert_eq!(out.trace.intermediate_sizes().len(), 4);
        assert_eq!(out.trace.intermediate_sizes()[0], 3);
        let mut rows: Vec<usize> = out.trace.steps.iter().map(|s| s.row).collect();
        rows.sort_unstable();
        assert_eq!(rows, vec![0, 1, 2, 3]);
        for s in &out.trace.steps {
            assert!(s.kept <= s.generated);
        }
        let empty = run(&IneqSystem::empty(2), &DdOptions::default(), None).unwrap();
        assert_eq!(empty.trace.mean_intermediate(), 2.0);
    }

    #[test]
    fn parallel_matches_sequential() {
        for seed in 0..10 {
            let s = random_system(&RandomSpec::new(5, 6, seed)).unwrap();
            let seq = run(&s, &DdOptions::default(), None).unwrap();
            let par = run(&s, &DdOptions { jobs: 3, ..DdOptions::default() }, None).unwrap();
            assert_eq!(seq.generators.canonical(), par.generators.canonical());
            assert_eq!(seq.trace, par.trace);
        }
    }

    fn spec() -> impl Strategy<Value = RandomSpec> {
        (2usize..=5, 0usize..=5, any::<u64>(), 0.3f64..=1.0)
            .prop_map(|(d, n, seed, density)| RandomSpec { d, n, density, coeff_range: (-4, 4), seed })
    }

    proptest! {
        #![proptest_config(ProptestConfig { cases: 64, ..ProptestConfig::default() })]

        #[test]
        fn output_is_sound_and_methods_agree(spec in spec()) {
            let s = random_system(&spec).unwrap();
            let fast = compute_extreme(&s);
            let slow = compute_extreme_residuation(&s);
            prop_assert_eq!(fast.canonical(), slow.canonical());
            prop_assert!(fast.len() <= tropical_bound(s.len(), s.dim()).unwrap().try_into().unwrap_or(usize::MAX));
            for (i, g) in fast.iter().enumerate() {
                prop_assert!(g.is_normalized());
                prop_assert!(s.satisfies(g).unwrap());
                prop_assert!(is_extreme_oracle(g, &s).unwrap());
                for h in &fast.vectors()[i + 1..] {
                    prop_assert!(!g.proportional(h));
                }
            }
        }

        #[test]
        fn combinations_are_covered(spec in spec(), coeffs in proptest::collection::vec(-3i64..=3, 8)) {
            // any combination of G that satisfies the new row lies in the
            // cone of the unfiltered candidates
            let s = random_system(&RandomSpec { n: spec.n + 1, ..spec }).unwrap();
            let last = s.len() - 1;
            let g = compute_extreme(&s.select_rows(&(0..last).collect::<Vec<_>>()));
            let (a, b) = s.row(last);
            let (le, gt) = split(&g, a, b);
            let mut pool = le.clone();
            for x in &le {
                for y in &gt {
                    let c = combine(x, y, a, b).unwrap();
                    prop_assert!(row_product(a, &c) <= row_product(b, &c));
                    pool.push(c);
                }
            }
            let mut x = Vector::bottom(s.dim());
            for (gen, c) in g.iter().zip(&coeffs) {
                x = x.oplus(&gen.scale(&Scalar::from_int(*c)));
            }
            if row_product(a, &x) <= row_product(b, &x) {
                prop_assert!(member(&pool, &x).unwrap());
            }
        }

        #[test]
        fn row_order_does_not_matter(spec in spec(), rot in 0usize..6) {
            let s = random_system(&spec).unwrap();
            let mut order: Vec<usize> = (0..s.len()).rev().collect();
            if !order.is_empty() {
                let r = rot % order.len();
                order.rotate_left(r);
            }
            prop_assert_eq!(compute_extreme(&s).canonical(), compute_extreme(&s.select_rows(&order)).canonical());
        }
    }
}
