//! Constructive greedy orderings by backward vertex deletion.
//!
//! Both variants delete vertices from the full instance down to a single
//! vertex, driven by the sign (or exact value) of the running scaled
//! discrepancy N. Deleting a vertex of live degree d from a t-vertex
//! induced subinstance updates N by
//!
//! ```text
//! N' = N + m*C(t-1, k-1) - d*C(n, k)
//! ```
//!
//! which follows from e' = e - d and C(t,k) = C(t-1,k) + C(t-1,k-1).

use std::collections::BTreeSet;

use crate::discrepancy::{certify, evaluate_ordering, BoundCertificate, DiscContext, PrefixProfile};
use crate::error::Error;
use crate::hypergraph::{DeletionState, UniformHypergraph};

/// Which selection rule drives the deletion.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum GreedyVariant {
    /// Delete a minimum-live-degree vertex while N <= 0 and a maximum-live-
    /// degree vertex while N > 0 (ties: smallest id). The extreme degree is
    /// always on the required side of the average, so the per-step shrink
    /// inequalities hold.
    ProofRule,
    /// Delete the vertex minimizing |N'| (ties: prefer N' <= 0, then
    /// smallest id).
    ExactGreedy,
}

impl GreedyVariant {
    pub fn name(self) -> &'static str {
        match self {
            GreedyVariant::ProofRule => "proof",
            GreedyVariant::ExactGreedy => "exact",
        }
    }
}

/// Sign class of the scaled discrepancy before a step; N = 0 counts as
/// negative, where either case analysis is sound.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SignCase {
    Negative,
    Positive,
}

/// One deletion step of a greedy run.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StepTrace {
    /// Live vertex count before the step.
    pub t: usize,
    pub vertex: u32,
    /// Live degree of the vertex at deletion time.
    pub degree: usize,
    pub case: SignCase,
    pub scaled_before: i128,
    pub scaled_after: i128,
}

/// A completed greedy run: the ordering, its independently recomputed
/// profile, the per-step trace, and the bound certificate.
#[derive(Debug, Clone)]
pub struct OrderingResult {
    pub variant: GreedyVariant,
    pub ordering: Vec<u32>,
    pub profile: PrefixProfile,
    pub trace: Vec<StepTrace>,
    pub certificate: BoundCertificate,
}

/// Verdict of a per-step invariant check on a proof-rule trace.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum StepVerdict {
    Holds,
    /// t <= k: the shrink factor is not defined for this step.
    NotApplicable,
    /// The dominant side failed to contract by (t-k)/t.
    ShrinkExceeded,
    /// The opposite side exceeded its density cap.
    OppositeCapExceeded,
}

/// Live-degree index with deterministic extreme and nearest queries;
/// smallest vertex id wins every tie.
///
/// For k = 2 degrees are dense in 0..n and an array of buckets is used; for
/// k >= 3 they range up to C(n-1, k-1), so an ordered set keyed by
/// (degree, id) is used instead.
pub(crate) enum DegreeIndex {
    Buckets {
        buckets: Vec<BTreeSet<u32>>,
        nonempty: BTreeSet<usize>,
    },
    Ordered(BTreeSet<(usize, u32)>),
}

impl DegreeIndex {
    pub fn for_hypergraph(h: &UniformHypergraph) -> Self {
        let n = h.vertex_count();
        if h.uniformity() == 2 {
            let mut buckets = vec![BTreeSet::new(); n.max(1)];
            let mut nonempty = BTreeSet::new();
            for (v, &d) in h.degrees().iter().enumerate() {
                buckets[d].insert(v as u32);
                nonempty.insert(d);
            }
            DegreeIndex::Buckets { buckets, nonempty }
        } else {
            let set = h
                .degrees()
                .iter()
                .enumerate()
                .map(|(v, &d)| (d, v as u32))
                .collect();
            DegreeIndex::Ordered(set)
        }
    }

    pub fn remove(&mut self, v: u32, d: usize) {
        match self {
            DegreeIndex::Buckets { buckets, nonempty } => {
                buckets[d].remove(&v);
                if buckets[d].is_empty() {
                    nonempty.remove(&d);
                }
            }
            DegreeIndex::Ordered(set) => {
                set.remove(&(d, v));
            }
        }
    }

    pub fn insert(&mut self, v: u32, d: usize) {
        match self {
            DegreeIndex::Buckets { buckets, nonempty } => {
                buckets[d].insert(v);
                nonempty.insert(d);
            }
            DegreeIndex::Ordered(set) => {
                set.insert((d, v));
            }
        }
    }

    pub fn decrement(&mut self, v: u32, old: usize) {
        debug_assert!(old > 0);
        self.remove(v, old);
        self.insert(v, old - 1);
    }

    fn first_at(&self, d: usize) -> Option<(u32, usize)> {
        match self {
            DegreeIndex::Buckets { buckets, .. } => {
                buckets[d].first().map(|&v| (v, d))
            }
            DegreeIndex::Ordered(set) => set
                .range((d, 0)..(d + 1, 0))
                .next()
                .map(|&(dd, v)| (v, dd)),
        }
    }

    /// Smallest live degree, smallest id.
    pub fn min_vertex(&self) -> Option<(u32, usize)> {
        match self {
            DegreeIndex::Buckets { nonempty, .. } => {
                nonempty.first().and_then(|&d| self.first_at(d))
            }
            DegreeIndex::Ordered(set) => set.first().map(|&(d, v)| (v, d)),
        }
    }

    /// Largest live degree, smallest id.
    pub fn max_vertex(&self) -> Option<(u32, usize)> {
        match self {
            DegreeIndex::Buckets { nonempty, .. } => {
                nonempty.last().and_then(|&d| self.first_at(d))
            }
            DegreeIndex::Ordered(set) => {
                set.last().and_then(|&(d, _)| self.first_at(d))
            }
        }
    }

    /// Smallest live degree >= threshold, smallest id.
    fn succ_vertex(&self, threshold: usize) -> Option<(u32, usize)> {
        match self {
            DegreeIndex::Buckets { nonempty, .. } => nonempty
                .range(threshold..)
                .next()
                .and_then(|&d| self.first_at(d)),
            DegreeIndex::Ordered(set) => set
                .range((threshold, 0)..)
                .next()
                .map(|&(d, _)| d)
                .and_then(|d| self.first_at(d)),
        }
    }

    /// Largest live degree < threshold, smallest id.
    fn pred_vertex(&self, threshold: usize) -> Option<(u32, usize)> {
        match self {
            DegreeIndex::Buckets { nonempty, .. } => nonempty
                .range(..threshold)
                .next_back()
                .and_then(|&d| self.first_at(d)),
            DegreeIndex::Ordered(set) => set
                .range(..(threshold, 0))
                .next_back()
                .map(|&(d, _)| d)
                .and_then(|d| self.first_at(d)),
        }
    }

    /// Vertex whose degree d minimizes |target - d*denom|, resolved in
    /// exact integers. Ties between the two sides prefer d*denom >= target
    /// (the side that lands at or below the density line).
    pub fn nearest_vertex(&self, target: i128, denom: i128) -> Option<(u32, usize)> {
        if denom == 0 {
            return self.min_vertex();
        }
        let threshold = usize::try_from(ceil_div(target, denom).max(0)).unwrap_or(usize::MAX);
        let up = self.succ_vertex(threshold);
        let down = self.pred_vertex(threshold);
        match (up, down) {
            (Some((uv, ud)), Some((dv, dd))) => {
                let up_err = ((ud as i128) * denom - target).abs();
                let down_err = (target - (dd as i128) * denom).abs();
                if up_err <= down_err {
                    Some((uv, ud))
                } else {
                    Some((dv, dd))
                }
            }
            (a, b) => a.or(b),
        }
    }
}

fn ceil_div(a: i128, b: i128) -> i128 {
    debug_assert!(b > 0);
    let q = a.div_euclid(b);
    if a.rem_euclid(b) != 0 {
        q + 1
    } else {
        q
    }
}

/// Runs one greedy deletion ordering over the instance.
///
/// Deleted vertices fill positions n down to 2 of the returned ordering;
/// the survivor takes position 1. The profile is recomputed independently
/// from the ordering, so the trace and the profile cross-check each other.
pub fn order(h: &UniformHypergraph, variant: GreedyVariant) -> Result<OrderingResult, Error> {
    let ctx = DiscContext::for_hypergraph(h)?;
    let n = h.vertex_count();
    let m = h.edge_count() as i128;
    let denom = ctx.denom();
    let mut state = DeletionState::new(h);
    let mut index = DegreeIndex::for_hypergraph(h);
    let mut ordering = vec![0u32; n];
    let mut trace = Vec::with_capacity(n.saturating_sub(1));
    let mut scaled: i128 = 0;

    for t in (2..=n).rev() {
        let increment = m
            .checked_mul(ctx.choose_km1(t - 1))
            .ok_or(Error::Overflow)?;
        let (v, d) = match variant {
            GreedyVariant::ProofRule => {
                if scaled <= 0 {
                    index.min_vertex()
                } else {
                    index.max_vertex()
                }
            }
            GreedyVariant::ExactGreedy => {
                let target = scaled.checked_add(increment).ok_or(Error::Overflow)?;
                index.nearest_vertex(target, denom)
            }
        }
        .ok_or(Error::EmptyGraph)?;
        debug_assert_eq!(d, state.live_degree(v));

        let scaled_after = scaled
            .checked_add(increment)
            .ok_or(Error::Overflow)?
            .checked_sub((d as i128).checked_mul(denom).ok_or(Error::Overflow)?)
            .ok_or(Error::Overflow)?;
        trace.push(StepTrace {
            t,
            vertex: v,
            degree: d,
            case: if scaled <= 0 {
                SignCase::Negative
            } else {
                SignCase::Positive
            },
            scaled_before: scaled,
            scaled_after,
        });

        index.remove(v, d);
        state.delete_vertex_with(v, |u, old| index.decrement(u, old))?;
        ordering[t - 1] = v;
        scaled = scaled_after;
    }
    if n >= 1 {
        let (survivor, _) = index.min_vertex().ok_or(Error::EmptyGraph)?;
        ordering[0] = survivor;
    }

    let profile = evaluate_ordering(h, &ordering)?;
    let certificate = certify(&profile);
    Ok(OrderingResult {
        variant,
        ordering,
        profile,
        trace,
        certificate,
    })
}

/// Verifies the per-step contraction of a proof-rule step in exact
/// integers. With t live vertices before the step:
///
/// * negative case: t*max(-N',0) <= (t-k)*(-N) and N' <= m*C(t-1,k-1);
/// * positive case: t*max(N',0) <= (t-k)*N and -N' <= (C(n,k)-m)*C(t-1,k-1).
///
/// Steps with t <= k are reported `NotApplicable`.
pub fn check_step_invariants(
    step: &StepTrace,
    variant: GreedyVariant,
    ctx: &DiscContext,
) -> Result<StepVerdict, Error> {
    if variant != GreedyVariant::ProofRule {
        return Err(Error::WrongVariant);
    }
    let k = ctx.k();
    if step.t < k + 1 {
        return Ok(StepVerdict::NotApplicable);
    }
    let t = step.t as i128;
    let kk = k as i128;
    let m = ctx.m() as i128;
    let side_cap = ctx.choose_km1(step.t - 1);
    let ok = |x: i128, y: i128| -> Result<bool, Error> {
        // x*t <= y*(t-k)
        let lhs = x.checked_mul(t).ok_or(Error::Overflow)?;
        let rhs = y.checked_mul(t - kk).ok_or(Error::Overflow)?;
        Ok(lhs <= rhs)
    };
    match step.case {
        SignCase::Negative => {
            debug_assert!(step.scaled_before <= 0);
            if !ok((-step.scaled_after).max(0), -step.scaled_before)? {
                return Ok(StepVerdict::ShrinkExceeded);
            }
            let cap = m.checked_mul(side_cap).ok_or(Error::Overflow)?;
            if step.scaled_after > cap {
                return Ok(StepVerdict::OppositeCapExceeded);
            }
        }
        SignCase::Positive => {
            debug_assert!(step.scaled_before > 0);
            if !ok(step.scaled_after.max(0), step.scaled_before)? {
                return Ok(StepVerdict::ShrinkExceeded);
            }
            let cap = (ctx.denom() - m)
                .checked_mul(side_cap)
                .ok_or(Error::Overflow)?;
            if -step.scaled_after > cap {
                return Ok(StepVerdict::OppositeCapExceeded);
            }
        }
    }
    Ok(StepVerdict::Holds)
}

/// Runs `check_step_invariants` over a whole proof-rule result, returning
/// the first non-holding step, if any.
pub fn check_all_step_invariants(
    result: &OrderingResult,
    ctx: &DiscContext,
) -> Result<Option<(usize, StepVerdict)>, Error> {
    for step in &result.trace {
        match check_step_invariants(step, result.variant, ctx)? {
            StepVerdict::Holds | StepVerdict::NotApplicable => {}
            bad => return Ok(Some((step.t, bad))),
        }
    }
    Ok(None)
}
