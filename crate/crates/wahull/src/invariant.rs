//! Computation of Z-linear and Z-affine invariants of weighted automata.
//!
//! The central procedure grows a union of components from the initial
//! vector, closing it under the transition matrices. Whenever the union
//! gets longer than `c^d` components it merges a pair of components whose
//! span provably stays inside every invariant of length at most `c`, so
//! the result is stronger than all of them. With `c` at least the length
//! of the strongest invariant (the topological closure of the reachability
//! set, the "hull"), the result is the hull itself.
//!
//! The merge search recurses on the dimension of joint spans: a collection
//! of `c^k + 1` components inside the common intersection whose joint span
//! has dimension at most `k` always yields a mergeable pair. At the base
//! two equal components merge trivially; otherwise either a sub-collection
//! of `c^(k-1) + 1` components spans dimension at most `k - 1` and the
//! search descends into it, or no such sub-collection exists and the whole
//! joint span is safe, so the first two components merge.

use std::collections::hash_map::Entry;
use std::collections::{HashMap, VecDeque};

use num::bigint::BigUint;
use num::One;

use crate::error::{Error, Result};
use crate::linalg::{row_times_matrix, Scalar, Subspace};
use crate::wa::WeightedAutomaton;
use crate::zariski::{AffineComponent, Mode, ZSet};

/// Default cap on component-level operations per invariant computation.
pub const DEFAULT_STEP_CAP: u64 = 1_000_000;

/// Default bound on invariant length used by [`strongest_invariant`].
pub const DEFAULT_LENGTH_BOUND: usize = 16;

#[derive(Clone, Debug)]
pub struct InvariantOptions {
    /// Length bound `c`: the result is stronger than every invariant with
    /// at most this many components.
    pub length_bound: usize,
    /// Maximum word length probed by the density check; defaults to
    /// `2 * dim * length(result)` when unset.
    pub probe_len: Option<usize>,
    /// Cap on component-level operations before giving up.
    pub step_cap: u64,
}

impl Default for InvariantOptions {
    fn default() -> Self {
        InvariantOptions {
            length_bound: DEFAULT_LENGTH_BOUND,
            probe_len: None,
            step_cap: DEFAULT_STEP_CAP,
        }
    }
}

impl InvariantOptions {
    pub fn with_length_bound(length_bound: usize) -> Self {
        InvariantOptions {
            length_bound,
            ..Default::default()
        }
    }
}

/// Operation counters for one invariant computation.
#[derive(Clone, Default, PartialEq, Eq, Debug)]
pub struct InvariantStats {
    /// Components added by closing under a transition matrix.
    pub expansions: u64,
    /// Pair merges performed by the reduction step.
    pub merges: u64,
    /// Component containment tests, the dominant cost.
    pub containment_checks: u64,
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct InvariantReport {
    pub result: ZSet,
    /// The length bound `c` the computation ran with.
    pub length_bound: usize,
    /// Whether `c` provably covers the length of the strongest invariant,
    /// so the result is certainly the hull. Only available when the
    /// transition matrices pairwise commute.
    pub certified_strongest: bool,
    /// Whether every component is the span of the reachable vectors lying
    /// in it — a necessary condition for the result to be the hull, never
    /// a proof.
    pub density_check_passed: bool,
    pub stats: InvariantStats,
}

impl InvariantReport {
    /// Whether anything corroborates that the result is the hull.
    pub fn corroborated(&self) -> bool {
        self.certified_strongest || self.density_check_passed
    }
}

struct Budget<'a> {
    cap: u64,
    used: u64,
    stats: &'a mut InvariantStats,
}

impl Budget<'_> {
    fn charge_containment(&mut self, n: u64) -> Result<()> {
        self.stats.containment_checks += n;
        self.used += n;
        if self.used > self.cap {
            return Err(Error::BudgetExceeded { cap: self.cap });
        }
        Ok(())
    }
}

/// Computes an invariant of `wa` that is contained in every Z-linear
/// (resp. Z-affine) invariant with at most `c` components.
pub fn compute_invariant(
    wa: &WeightedAutomaton,
    c: usize,
    mode: Mode,
    opts: &InvariantOptions,
) -> Result<InvariantReport> {
    if c == 0 {
        return Err(Error::InvalidInput("length bound must be at least 1".into()));
    }
    let d = wa.dim();
    let mut stats = InvariantStats::default();
    let mut budget = Budget {
        cap: opts.step_cap,
        used: 0,
        stats: &mut stats,
    };
    let trigger = BigUint::from(c).pow(d as u32);

    let seed = match mode {
        Mode::Affine => AffineComponent::point_component(wa.initial().to_vec()),
        // Every union of subspaces containing a point contains its line.
        Mode::Linear => AffineComponent::linear(Subspace::span_unchecked(
            vec![wa.initial().to_vec()],
            d,
        )),
    };
    let mut set = ZSet::from_components(d, mode, vec![seed.clone()])?;
    let mut queue: VecDeque<(AffineComponent, usize)> = VecDeque::new();
    let letters = wa.alphabet().len();
    for a in 0..letters {
        queue.push_back((seed.clone(), a));
    }

    while let Some((comp, a)) = queue.pop_front() {
        budget.charge_containment(1)?;
        // Stale entries: the component may have been merged away.
        if !set.components().contains(&comp) {
            continue;
        }
        let image = comp.apply(wa.transition(a))?;
        budget.charge_containment(set.length() as u64)?;
        if set.contains_component(&image)? {
            continue;
        }
        // The image escapes, so it becomes a new component. It cannot be
        // absorbed (no existing component contains it), but it may absorb
        // existing components, whose pending checks are then subsumed by
        // the image's own fresh checks.
        budget.charge_containment(set.length() as u64)?;
        set.insert_fresh_component(image.clone());
        budget.stats.expansions += 1;
        for b in 0..letters {
            queue.push_back((image.clone(), b));
        }

        if BigUint::from(set.length()) > trigger {
            let (i, j) = find_pair_in(set.components(), c, mode, d, true, &mut budget)?;
            let merged = set.components()[i].span_union(&set.components()[j], mode)?;
            set.remove_pair(i, j);
            budget.charge_containment(set.length() as u64)?;
            // The merged span may itself sit inside a surviving component,
            // in which case the pair is simply absorbed.
            if !set.contains_component(&merged)? {
                set.insert_fresh_component(merged.clone());
                for b in 0..letters {
                    queue.push_back((merged.clone(), b));
                }
            }
            budget.stats.merges += 1;
        }
    }

    debug_assert!(set.is_invariant(wa)?);
    Ok(InvariantReport {
        result: set,
        length_bound: c,
        certified_strongest: false,
        density_check_passed: false,
        stats,
    })
}

/// One reduction step: replaces a mergeable pair of components of `z` by
/// their span. `d` is the recursion depth, normally the automaton
/// dimension; the set must have more than `c^d` components.
pub fn reduce_zset(z: &ZSet, c: usize, d: usize, mode: Mode) -> Result<ZSet> {
    let trigger = BigUint::from(c).pow(d as u32);
    if BigUint::from(z.length()) <= trigger {
        return Err(Error::InvalidInput(
            "reduction applies only to sets longer than c^d".into(),
        ));
    }
    let mut stats = InvariantStats::default();
    let mut budget = Budget {
        cap: DEFAULT_STEP_CAP,
        used: 0,
        stats: &mut stats,
    };
    let take = usize::try_from(&trigger + 1u32).unwrap_or(z.length()).min(z.length());
    let head = &z.components()[..take];
    let (i, j) = find_pair_in(head, c, mode, d, true, &mut budget)?;
    let merged = head[i].span_union(&head[j], mode)?;
    let mut comps = z.components().to_vec();
    comps.remove(j);
    comps.remove(i);
    comps.push(merged);
    ZSet::from_components(z.ambient_dim(), mode, comps)
}

/// Finds a pair of components whose span union stays inside every
/// invariant of length at most `c`, assuming all the given components do.
/// The collection length must be `c^k + 1` for the recursion level `k`
/// (with `c = 1` any level matches and the ambient dimension is used).
/// Returns the pair chosen at the base of the recursion, deterministically.
pub fn find_mergeable_pair(
    components: &[AffineComponent],
    c: usize,
    mode: Mode,
) -> Result<(usize, usize)> {
    let ambient = components
        .first()
        .map(AffineComponent::ambient_dim)
        .unwrap_or(0);
    let mut stats = InvariantStats::default();
    let mut budget = Budget {
        cap: DEFAULT_STEP_CAP,
        used: 0,
        stats: &mut stats,
    };
    find_pair_in(components, c, mode, ambient, false, &mut budget)
}

fn find_pair_in(
    components: &[AffineComponent],
    c: usize,
    mode: Mode,
    ambient_level: usize,
    irredundant: bool,
    budget: &mut Budget,
) -> Result<(usize, usize)> {
    if c == 0 || components.len() < 2 {
        return Err(Error::NoMergeablePair);
    }
    let level = if c == 1 {
        ambient_level
    } else {
        // Recover k from |components| = c^k + 1.
        let mut k = 0u32;
        let m = BigUint::from(components.len() - 1);
        let base = BigUint::from(c);
        let mut pow = BigUint::one();
        while pow < m {
            pow *= &base;
            k += 1;
        }
        if pow != m {
            return Err(Error::NoMergeablePair);
        }
        k as usize
    };

    // A comparable pair merges unconditionally: its span is the larger
    // component. Canonical collections are irredundant, so their callers
    // skip the quadratic containment scan.
    budget.charge_containment((components.len() * components.len() / 2) as u64)?;
    for i in 0..components.len() {
        for j in i + 1..components.len() {
            let comparable = if irredundant {
                components[i] == components[j]
            } else {
                components[i].is_contained_in(&components[j])?
                    || components[j].is_contained_in(&components[i])?
            };
            if comparable {
                return Ok((i, j));
            }
        }
    }

    let indices: Vec<usize> = (0..components.len()).collect();
    find_pair_rec(components, &indices, c, mode, level, budget)
}

/// `indices` always has length `c^k + 1` and the indexed components are
/// pairwise incomparable; the caller guarantees their joint span has
/// dimension at most `k`, except at the top level where this is verified
/// before the fallback merge.
fn find_pair_rec(
    components: &[AffineComponent],
    indices: &[usize],
    c: usize,
    mode: Mode,
    k: usize,
    budget: &mut Budget,
) -> Result<(usize, usize)> {
    budget.charge_containment(indices.len() as u64)?;
    if k >= 1 {
        // Look for c^(k-1) + 1 components whose joint span has dimension
        // below k. Any such sub-collection is generated by a minimal
        // subset of its members, so it suffices to enumerate generator
        // chains and collect the components contained in their span.
        let needed = match usize::try_from(BigUint::from(c).pow((k - 1) as u32) + 1u32) {
            Ok(n) => n,
            Err(_) => usize::MAX,
        };
        if needed <= indices.len() {
            let mut chain = Vec::new();
            if let Some(sub) =
                chain_search(components, indices, mode, k, needed, &mut chain, None, 0, budget)?
            {
                return find_pair_rec(components, &sub, c, mode, k - 1, budget);
            }
        }
    }

    // No sub-collection descends. If the joint span has dimension at most
    // k it is contained in every invariant of length at most c and any
    // pair merges; otherwise the collection violates the precondition.
    let joint = span_of(components, indices, mode)?;
    budget.charge_containment(indices.len() as u64)?;
    if joint.dim() <= k {
        Ok((indices[0], indices[1]))
    } else {
        Err(Error::NoMergeablePair)
    }
}

/// Depth-first search over generator chains in lexicographic order.
/// Members are added in ascending index order and each must strictly raise
/// the span dimension, which stays at most `k - 1`; ascending-order
/// prefixes of minimal generator sets always have strictly rising
/// dimension, so the enumeration is complete. Chains of length one never
/// qualify on incomparable collections and are skipped.
#[allow(clippy::too_many_arguments)]
fn chain_search(
    components: &[AffineComponent],
    indices: &[usize],
    mode: Mode,
    k: usize,
    needed: usize,
    chain: &mut Vec<usize>,
    carrier: Option<&AffineComponent>,
    start: usize,
    budget: &mut Budget,
) -> Result<Option<Vec<usize>>> {
    if chain.len() >= 2 {
        let carrier = carrier.expect("nonempty chain has a carrier");
        budget.charge_containment(indices.len() as u64)?;
        let mut compatible = Vec::new();
        for &i in indices {
            if components[i].is_contained_in(carrier)? {
                compatible.push(i);
            }
        }
        if compatible.len() >= needed {
            compatible.truncate(needed);
            return Ok(Some(compatible));
        }
    }
    // Every extension raises the dimension, so stop once there is no room
    // left below k - 1.
    let cur_dim = carrier.map(AffineComponent::dim);
    if cur_dim.is_some_and(|d| d + 1 > k - 1) {
        return Ok(None);
    }
    for pos in start..indices.len() {
        let i = indices[pos];
        budget.charge_containment(1)?;
        let trial = match carrier {
            None => components[i].clone(),
            Some(c) => c.span_union(&components[i], mode)?,
        };
        if trial.dim() > k - 1 {
            continue;
        }
        if cur_dim.is_some_and(|d| trial.dim() <= d) {
            // The member lies in the current span; a smaller chain covers
            // this generator set.
            continue;
        }
        chain.push(i);
        let found =
            chain_search(components, indices, mode, k, needed, chain, Some(&trial), pos + 1, budget)?;
        chain.pop();
        if found.is_some() {
            return Ok(found);
        }
    }
    Ok(None)
}

/// Joint span (linear or affine) of the indexed components, as a direction
/// subspace through the first component's point in affine mode.
fn span_of(components: &[AffineComponent], indices: &[usize], mode: Mode) -> Result<Subspace> {
    let ambient = components[indices[0]].ambient_dim();
    let mut dir = Subspace::zero(ambient);
    match mode {
        Mode::Linear => {
            for &i in indices {
                for row in components[i].direction().basis() {
                    dir.insert(row);
                }
                dir.insert(components[i].point());
            }
        }
        Mode::Affine => {
            let base = components[indices[0]].point().to_vec();
            for &i in indices {
                for row in components[i].direction().basis() {
                    dir.insert(row);
                }
                dir.insert(&crate::linalg::vec_ops::sub(components[i].point(), &base));
            }
        }
    }
    Ok(dir)
}

/// Result of evaluating the commuting-case length bound `(2 d^2)!`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub enum LengthBound {
    Value(BigUint),
    /// The factorial argument exceeded the configured limit.
    Astronomical,
}

/// Bound on the length of the strongest Z-linear invariant when the
/// transition matrices pairwise commute: `(2 d^2)!`.
pub fn commuting_length_bound(d: usize) -> LengthBound {
    commuting_length_bound_with_limit(d, 10_000)
}

/// Same as [`commuting_length_bound`], refusing to expand factorials with
/// an argument above `max_arg`.
pub fn commuting_length_bound_with_limit(d: usize, max_arg: usize) -> LengthBound {
    let arg = match d.checked_mul(d).and_then(|dd| dd.checked_mul(2)) {
        Some(a) if a <= max_arg => a,
        _ => return LengthBound::Astronomical,
    };
    let mut acc = BigUint::one();
    for i in 2..=arg {
        acc *= BigUint::from(i);
    }
    LengthBound::Value(acc)
}

/// Computes an invariant with the configured length bound and evaluates
/// the hull evidence: certification (commuting transition matrices and a
/// length bound covering the proven bound) and the reachability density
/// check. Certification implies the density check by construction.
pub fn strongest_invariant(
    wa: &WeightedAutomaton,
    mode: Mode,
    opts: &InvariantOptions,
) -> Result<InvariantReport> {
    let mut report = compute_invariant(wa, opts.length_bound, mode, opts)?;
    let probe = opts
        .probe_len
        .unwrap_or_else(|| 2 * wa.dim() * report.result.length().max(1));
    report.density_check_passed = density_check(wa, &report.result, mode, probe, opts.step_cap)?;
    let commuting = transitions_commute(wa);
    let covered = match commuting_length_bound(wa.dim()) {
        LengthBound::Value(n) => BigUint::from(opts.length_bound) >= n,
        LengthBound::Astronomical => false,
    };
    report.certified_strongest = commuting && covered && report.density_check_passed;
    Ok(report)
}

fn transitions_commute(wa: &WeightedAutomaton) -> bool {
    let ms = wa.transitions();
    for i in 0..ms.len() {
        for j in i + 1..ms.len() {
            if ms[i].mul(&ms[j]) != ms[j].mul(&ms[i]) {
                return false;
            }
        }
    }
    true
}

/// Necessary condition for `z` to be the closure of the reachability set:
/// for every component, the span (linear or affine per `mode`) of the
/// reachable vectors lying in it must be the whole component. Explores
/// distinct reachable vectors breadth-first up to words of length
/// `probe_len`; returns false if the cap is hit before every component
/// saturates.
pub fn density_check(
    wa: &WeightedAutomaton,
    z: &ZSet,
    mode: Mode,
    probe_len: usize,
    vector_cap: u64,
) -> Result<bool> {
    let n = z.length();
    // Span accumulated per component, as (seen-any, base point, direction).
    let mut seen: Vec<Option<(Vec<Scalar>, Subspace)>> = vec![None; n];
    let mut saturated = vec![false; n];

    let absorb = |comp_idx: usize,
                      x: &[Scalar],
                      seen: &mut Vec<Option<(Vec<Scalar>, Subspace)>>,
                      saturated: &mut Vec<bool>| {
        let comp = &z.components()[comp_idx];
        let entry = seen[comp_idx].get_or_insert_with(|| {
            let base = match mode {
                Mode::Linear => vec![Scalar::zero(); wa.dim()],
                Mode::Affine => x.to_vec(),
            };
            (base, Subspace::zero(wa.dim()))
        });
        match mode {
            Mode::Linear => {
                entry.1.insert(x);
            }
            Mode::Affine => {
                let diff = crate::linalg::vec_ops::sub(x, &entry.0);
                entry.1.insert(&diff);
            }
        }
        if entry.1.dim() == comp.dim() {
            saturated[comp_idx] = true;
        }
    };

    let mut visited: HashMap<Vec<Scalar>, ()> = HashMap::new();
    let mut frontier = vec![wa.initial().to_vec()];
    visited.insert(wa.initial().to_vec(), ());

    let handle = |x: &Vec<Scalar>,
                      seen: &mut Vec<Option<(Vec<Scalar>, Subspace)>>,
                      saturated: &mut Vec<bool>|
     -> Result<()> {
        for idx in 0..n {
            if z.components()[idx].contains_point(x)? {
                absorb(idx, x, seen, saturated);
            }
        }
        Ok(())
    };
    handle(&wa.initial().to_vec(), &mut seen, &mut saturated)?;

    for _ in 0..probe_len {
        if saturated.iter().all(|&s| s) {
            break;
        }
        let mut next = Vec::new();
        for x in &frontier {
            for m in wa.transitions() {
                let y = row_times_matrix(x, m);
                if visited.len() as u64 >= vector_cap {
                    return Ok(false);
                }
                if let Entry::Vacant(e) = visited.entry(y.clone()) {
                    e.insert(());
                    handle(&y, &mut seen, &mut saturated)?;
                    next.push(y);
                }
            }
        }
        if next.is_empty() {
            break;
        }
        frontier = next;
    }

    // A component with no reachable vector at all cannot be part of the
    // closure of the reachability set.
    Ok((0..n).all(|i| saturated[i] || (z.components()[i].dim() == 0 && seen[i].is_some())))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::vec_ops::int_vec;
    use crate::linalg::Matrix;
    use crate::wa::fixtures::{geometric_sum_wa, parity_wa, zero_wa};

    fn axes() -> ZSet {
        let e1 = AffineComponent::linear(Subspace::span(vec![int_vec(&[1, 0])], 2).unwrap());
        let e2 = AffineComponent::linear(Subspace::span(vec![int_vec(&[0, 1])], 2).unwrap());
        ZSet::from_components(2, Mode::Linear, vec![e1, e2]).unwrap()
    }

    #[test]
    fn parity_linear_invariant_is_the_two_axes() {
        let wa = parity_wa();
        for c in [2, 3, 16] {
            let rep =
                compute_invariant(&wa, c, Mode::Linear, &InvariantOptions::default()).unwrap();
            assert_eq!(rep.result, axes(), "c = {c}");
            assert_eq!(rep.result.dim(), 1);
            assert_eq!(rep.result.length(), 2);
        }
    }

    #[test]
    fn geometric_sum_affine_invariant_is_the_shifted_line() {
        let wa = geometric_sum_wa();
        let rep = compute_invariant(&wa, 1, Mode::Affine, &InvariantOptions::default()).unwrap();
        assert_eq!(rep.result.length(), 1);
        assert_eq!(rep.result.dim(), 1);
        let comp = &rep.result.components()[0];
        assert_eq!(comp.point(), &int_vec(&[0, 1])[..]);
        assert_eq!(
            comp.direction(),
            &Subspace::span(vec![int_vec(&[1, 1])], 2).unwrap()
        );
    }

    #[test]
    fn geometric_sum_linear_invariant_is_the_plane() {
        let wa = geometric_sum_wa();
        let rep = compute_invariant(&wa, 1, Mode::Linear, &InvariantOptions::default()).unwrap();
        assert_eq!(rep.result, ZSet::full(2, Mode::Linear));
        let rep16 = compute_invariant(&wa, 16, Mode::Linear, &InvariantOptions::default()).unwrap();
        assert_eq!(rep16.result, ZSet::full(2, Mode::Linear));
    }

    #[test]
    fn results_are_invariants_and_deterministic() {
        for (wa, mode) in [
            (parity_wa(), Mode::Linear),
            (parity_wa(), Mode::Affine),
            (geometric_sum_wa(), Mode::Affine),
            (zero_wa(), Mode::Linear),
        ] {
            let a = compute_invariant(&wa, 4, mode, &InvariantOptions::default()).unwrap();
            let b = compute_invariant(&wa, 4, mode, &InvariantOptions::default()).unwrap();
            assert!(a.result.is_invariant(&wa).unwrap());
            assert_eq!(a, b);
        }
    }

    #[test]
    fn reduce_merges_two_points_into_their_line() {
        let p = AffineComponent::point_component(int_vec(&[1, 0]));
        let q = AffineComponent::point_component(int_vec(&[0, 1]));
        let z = ZSet::from_components(2, Mode::Affine, vec![p.clone(), q.clone()]).unwrap();
        let reduced = reduce_zset(&z, 1, 2, Mode::Affine).unwrap();
        assert_eq!(reduced.length(), 1);
        assert_eq!(reduced.components()[0], p.affine_union(&q).unwrap());
    }

    #[test]
    fn reduce_merges_collinear_points() {
        // Three collinear points with c = 2 sit at recursion level 1; the
        // merged line then absorbs the remaining point.
        let pts: Vec<AffineComponent> = [0i64, 1, 2]
            .iter()
            .map(|&t| AffineComponent::point_component(int_vec(&[t, t])))
            .collect();
        let z = ZSet::from_components(2, Mode::Affine, pts.clone()).unwrap();
        let reduced = reduce_zset(&z, 2, 1, Mode::Affine).unwrap();
        assert_eq!(reduced.length(), 1);
        let line = &reduced.components()[0];
        assert_eq!(line.dim(), 1);
        for p in &pts {
            assert!(p.is_contained_in(line).unwrap());
        }
    }

    #[test]
    fn reduce_requires_overlong_sets() {
        let z = axes();
        assert!(matches!(
            reduce_zset(&z, 2, 2, Mode::Linear),
            Err(Error::InvalidInput(_))
        ));
    }

    #[test]
    fn mergeable_pair_prefers_duplicates() {
        // Four components, c = 3 (level 1): duplicates at indices 0 and 3.
        let comps = vec![
            AffineComponent::point_component(int_vec(&[5, 5])),
            AffineComponent::point_component(int_vec(&[1, 0])),
            AffineComponent::point_component(int_vec(&[0, 1])),
            AffineComponent::point_component(int_vec(&[5, 5])),
        ];
        assert_eq!(find_mergeable_pair(&comps, 3, Mode::Affine).unwrap(), (0, 3));
    }

    #[test]
    fn mergeable_pair_on_collinear_points_is_deterministic() {
        let comps: Vec<AffineComponent> = [0i64, 1, 2]
            .iter()
            .map(|&t| AffineComponent::point_component(int_vec(&[t, 2 * t])))
            .collect();
        assert_eq!(find_mergeable_pair(&comps, 2, Mode::Affine).unwrap(), (0, 1));
    }

    #[test]
    fn no_mergeable_pair_in_general_position() {
        // Three affinely independent points, c = 2: joint span has
        // dimension 2 > 1, violating the recursion precondition.
        let comps = vec![
            AffineComponent::point_component(int_vec(&[0, 0])),
            AffineComponent::point_component(int_vec(&[1, 0])),
            AffineComponent::point_component(int_vec(&[0, 1])),
        ];
        assert_eq!(
            find_mergeable_pair(&comps, 2, Mode::Affine),
            Err(Error::NoMergeablePair)
        );
    }

    #[test]
    fn commuting_bound_values() {
        assert_eq!(commuting_length_bound(1), LengthBound::Value(BigUint::from(2u32)));
        assert_eq!(
            commuting_length_bound(2),
            LengthBound::Value(BigUint::from(40320u32))
        );
        let expected_18: BigUint = (2..=18u32).map(BigUint::from).product();
        assert_eq!(commuting_length_bound(3), LengthBound::Value(expected_18));
        assert_eq!(
            commuting_length_bound_with_limit(100, 10_000),
            LengthBound::Astronomical
        );
    }

    #[test]
    fn strongest_invariant_reports_density_and_certification() {
        let wa = parity_wa();
        let rep = strongest_invariant(&wa, Mode::Linear, &InvariantOptions::default()).unwrap();
        assert_eq!(rep.result, axes());
        assert!(rep.density_check_passed);
        // d = 2 needs c >= 8! for certification.
        assert!(!rep.certified_strongest);

        let one_dim = zero_wa();
        let rep = strongest_invariant(&one_dim, Mode::Linear, &InvariantOptions::default()).unwrap();
        assert!(rep.certified_strongest);
        assert!(rep.density_check_passed);
    }

    #[test]
    fn diagonal_growth_fills_the_plane() {
        // Reachable vectors (2^n, 4^n) lie on pairwise distinct lines, so
        // the linear hull is the whole plane.
        let wa = WeightedAutomaton::new(
            vec!["a".into()],
            int_vec(&[1, 1]),
            vec![Matrix::from_int_rows(&[&[2, 0], &[0, 4]])],
            int_vec(&[1, 1]),
        )
        .unwrap();
        let opts = InvariantOptions::with_length_bound(3);
        let rep = strongest_invariant(&wa, Mode::Linear, &opts).unwrap();
        assert_eq!(rep.result, ZSet::full(2, Mode::Linear));
        assert!(rep.density_check_passed);
    }

    #[test]
    fn budget_exhaustion_is_reported() {
        let wa = parity_wa();
        let opts = InvariantOptions {
            step_cap: 2,
            ..Default::default()
        };
        assert!(matches!(
            compute_invariant(&wa, 2, Mode::Linear, &opts),
            Err(Error::BudgetExceeded { cap: 2 })
        ));
    }

    #[test]
    fn invariant_contains_all_reach_points() {
        let wa = geometric_sum_wa();
        let rep = compute_invariant(&wa, 2, Mode::Affine, &InvariantOptions::default()).unwrap();
        let mut x = wa.initial().to_vec();
        for _ in 0..12 {
            assert!(rep.result.contains_point(&x).unwrap());
            x = row_times_matrix(&x, wa.transition(0));
        }
    }

    #[test]
    fn zero_dimensional_automaton() {
        let wa = WeightedAutomaton::new(vec!["a".into()], vec![], vec![Matrix::zero(0, 0)], vec![])
            .unwrap();
        for mode in [Mode::Linear, Mode::Affine] {
            let rep = strongest_invariant(&wa, mode, &InvariantOptions::default()).unwrap();
            assert_eq!(rep.result.length(), 1);
            assert_eq!(rep.result.dim(), 0);
            assert!(rep.certified_strongest);
        }
    }
}
