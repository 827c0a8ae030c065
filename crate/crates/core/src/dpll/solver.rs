//! The DPLL engine.
//!
//! Clauses are never physically removed. Each clause keeps the number of
//! true literals and of unassigned literals, which together describe it in
//! the residual formula: a clause with a true literal is gone, otherwise its
//! residual length is the unassigned count. Per-literal branching weights
//! (the sum of `2^-len` over residual clauses containing the literal) are
//! updated exactly on every assignment and undone on backtracking, so the
//! branching decisions coincide with recomputing the rule on the residual
//! formula at every node.

use std::sync::atomic::{AtomicBool, Ordering};
use std::time::{Duration, Instant};

use super::checkpoint::SearchState;
use super::weight::{cmp_weight, BranchWeight, Dyadic};
use super::{Assignment, Outcome, SolveResult, SolveStats};
use crate::cnf::{CnfFormula, Literal};
use crate::error::{Error, Result};

/// Resource limits for one search call.
#[derive(Debug, Clone, Copy, Default)]
pub struct Limits<'a> {
    /// Stop after this many branching nodes.
    pub max_nodes: Option<u64>,
    /// Stop after this much wall time.
    pub max_time: Option<Duration>,
    /// Cooperative cancellation; checked every few hundred nodes.
    pub cancel: Option<&'a AtomicBool>,
}

impl<'a> Limits<'a> {
    pub fn none() -> Self {
        Self::default()
    }

    pub fn nodes(max_nodes: u64) -> Self {
        Limits { max_nodes: Some(max_nodes), ..Self::default() }
    }
}

#[derive(Debug, Clone, Copy)]
struct Decision {
    code: u32,
    /// The first branch below this level has been refuted; `code` is the
    /// second branch.
    flipped: bool,
    trail_start: usize,
}

const UNASSIGNED: i8 = 0;

#[inline]
fn code_of(l: Literal) -> u32 {
    l.code() as u32
}

#[inline]
fn literal_of(code: u32) -> Literal {
    Literal::from_var((code >> 1) as usize + 1, code & 1 == 0)
}

/// A complete DPLL solver with two-sided Jeroslow-Wang branching over the
/// weight scalar `W`.
#[derive(Debug, Clone)]
pub struct Solver<W: BranchWeight = Dyadic> {
    num_vars: usize,
    lits: Vec<u32>,
    start: Vec<u32>,
    occ: Vec<Vec<u32>>,
    sat: Vec<u32>,
    free: Vec<u32>,
    value: Vec<i8>,
    weight: Vec<W>,
    pow2: Vec<W>,
    trail: Vec<u32>,
    units: Vec<u32>,
    unit_head: usize,
    num_satisfied: usize,
    conflict: bool,
    has_empty_clause: bool,
    root_units: Vec<u32>,
    decisions: Vec<Decision>,
    root_len: usize,
    stats: SolveStats,
}

impl<W: BranchWeight> Solver<W> {
    /// Builds the solver. Duplicate literals are merged and tautological
    /// clauses dropped; the formula must pass [`CnfFormula::validate`].
    pub fn new(formula: &CnfFormula) -> Result<Self> {
        formula.validate()?;
        let n = formula.num_vars;
        let mut lits = Vec::new();
        let mut start = vec![0u32];
        let mut occ = vec![Vec::new(); 2 * n];
        let mut has_empty_clause = false;
        let mut root_units = Vec::new();
        let mut max_len = 0;
        for clause in &formula.clauses {
            let mut codes: Vec<u32> = clause.iter().map(|&l| code_of(l)).collect();
            codes.sort_unstable();
            codes.dedup();
            if codes.windows(2).any(|w| w[0] ^ 1 == w[1]) {
                continue;
            }
            let idx = (start.len() - 1) as u32;
            match codes.len() {
                0 => has_empty_clause = true,
                1 => root_units.push(idx),
                _ => {}
            }
            for &c in &codes {
                occ[c as usize].push(idx);
            }
            max_len = max_len.max(codes.len());
            lits.extend_from_slice(&codes);
            start.push(lits.len() as u32);
        }
        let m = start.len() - 1;
        let pow2: Vec<W> = (0..=max_len as u32 + 1).map(W::pow2_neg).collect();
        let free: Vec<u32> = (0..m).map(|i| start[i + 1] - start[i]).collect();
        let mut weight = vec![W::zero(); 2 * n];
        for i in 0..m {
            let w = &pow2[free[i] as usize];
            for &c in &lits[start[i] as usize..start[i + 1] as usize] {
                weight[c as usize].add_to(w);
            }
        }
        let mut s = Solver {
            num_vars: n,
            lits,
            start,
            occ,
            sat: vec![0; m],
            free,
            value: vec![UNASSIGNED; n],
            weight,
            pow2,
            trail: Vec::with_capacity(n),
            units: Vec::new(),
            unit_head: 0,
            num_satisfied: 0,
            conflict: false,
            has_empty_clause,
            root_units,
            decisions: Vec::new(),
            root_len: 0,
            stats: SolveStats::default(),
        };
        s.reset_root();
        Ok(s)
    }

    pub fn num_vars(&self) -> usize {
        self.num_vars
    }

    pub fn num_clauses(&self) -> usize {
        self.sat.len()
    }

    pub fn stats(&self) -> &SolveStats {
        &self.stats
    }

    #[inline]
    fn clause(&self, c: u32) -> &[u32] {
        &self.lits[self.start[c as usize] as usize..self.start[c as usize + 1] as usize]
    }

    #[inline]
    fn lit_value(&self, code: u32) -> i8 {
        let v = self.value[(code >> 1) as usize];
        if code & 1 == 0 {
            v
        } else {
            -v
        }
    }

    fn assign(&mut self, code: u32) {
        let var = (code >> 1) as usize;
        debug_assert_eq!(self.value[var], UNASSIGNED);
        self.value[var] = if code & 1 == 0 { 1 } else { -1 };
        self.trail.push(code);
        let Solver {
            lits, start, occ, sat, free, value, weight, pow2, num_satisfied, conflict, units, ..
        } = self;
        let unassigned = |y: u32| value[(y >> 1) as usize] == UNASSIGNED;
        for &c in &occ[code as usize] {
            let c = c as usize;
            if sat[c] == 0 {
                let w = &pow2[free[c] as usize];
                for &y in &lits[start[c] as usize..start[c + 1] as usize] {
                    if y == code || unassigned(y) {
                        weight[y as usize].sub_from(w);
                    }
                }
                *num_satisfied += 1;
            }
            sat[c] += 1;
            free[c] -= 1;
        }
        let neg = code ^ 1;
        for &c in &occ[neg as usize] {
            let ci = c as usize;
            let k = free[ci];
            free[ci] = k - 1;
            if sat[ci] == 0 {
                let w = &pow2[k as usize];
                for &y in &lits[start[ci] as usize..start[ci + 1] as usize] {
                    if y == neg {
                        weight[y as usize].sub_from(w);
                    } else if unassigned(y) {
                        weight[y as usize].add_to(w);
                    }
                }
                match k - 1 {
                    0 => *conflict = true,
                    1 => units.push(c),
                    _ => {}
                }
            }
        }
    }

    fn unassign(&mut self, code: u32) {
        let var = (code >> 1) as usize;
        let Solver { lits, start, occ, sat, free, value, weight, pow2, num_satisfied, .. } = self;
        let unassigned = |y: u32| value[(y >> 1) as usize] == UNASSIGNED;
        let neg = code ^ 1;
        for &c in occ[neg as usize].iter().rev() {
            let c = c as usize;
            let k = free[c] + 1;
            free[c] = k;
            if sat[c] == 0 {
                let w = &pow2[k as usize];
                for &y in &lits[start[c] as usize..start[c + 1] as usize] {
                    if y == neg {
                        weight[y as usize].add_to(w);
                    } else if unassigned(y) {
                        weight[y as usize].sub_from(w);
                    }
                }
            }
        }
        for &c in occ[code as usize].iter().rev() {
            let c = c as usize;
            sat[c] -= 1;
            free[c] += 1;
            if sat[c] == 0 {
                let w = &pow2[free[c] as usize];
                for &y in &lits[start[c] as usize..start[c + 1] as usize] {
                    if y == code || unassigned(y) {
                        weight[y as usize].add_to(w);
                    }
                }
                *num_satisfied -= 1;
            }
        }
        self.value[var] = UNASSIGNED;
    }

    /// Unit propagation to fixpoint; false on conflict.
    fn propagate(&mut self) -> bool {
        while !self.conflict && self.unit_head < self.units.len() {
            let c = self.units[self.unit_head];
            self.unit_head += 1;
            if self.sat[c as usize] > 0 {
                continue;
            }
            match self.free[c as usize] {
                0 => self.conflict = true,
                1 => {
                    let y = *self
                        .clause(c)
                        .iter()
                        .find(|&&y| self.lit_value(y) == UNASSIGNED)
                        .expect("unit clause has a free literal");
                    self.stats.propagations += 1;
                    self.assign(y);
                }
                _ => {}
            }
        }
        self.units.clear();
        self.unit_head = 0;
        !self.conflict
    }

    fn undo_to(&mut self, len: usize) {
        while self.trail.len() > len {
            let code = self.trail.pop().expect("trail longer than len");
            self.unassign(code);
        }
        self.conflict = false;
        self.units.clear();
        self.unit_head = 0;
    }

    /// Clears all assignments, including assumptions.
    fn reset_root(&mut self) {
        self.decisions.clear();
        self.undo_to(0);
        self.root_len = 0;
        self.conflict = self.has_empty_clause;
        self.units.extend_from_slice(&self.root_units);
    }

    /// Sets the root to the given assumptions (plus propagation). Returns
    /// false if they are contradictory with the formula.
    fn set_assumptions(&mut self, assumptions: &[Literal]) -> Result<bool> {
        self.reset_root();
        for &l in assumptions {
            if l.var() > self.num_vars {
                return Err(Error::input(format!("assumption {l} beyond {} variables", self.num_vars)));
            }
            if !self.propagate() {
                return Ok(false);
            }
            match self.lit_value(code_of(l)) {
                1 => continue,
                -1 => {
                    self.conflict = true;
                    return Ok(false);
                }
                _ => self.assign(code_of(l)),
            }
        }
        let ok = self.propagate();
        self.root_len = self.trail.len();
        Ok(ok)
    }

    /// The two-sided Jeroslow-Wang literal for the current residual formula:
    /// the variable maximising `w(x) + w(-x)` (smallest index on ties), with
    /// the heavier polarity (positive on ties). `None` if every clause is
    /// satisfied.
    fn choose(&self) -> Option<u32> {
        if self.num_satisfied == self.num_clauses() {
            return None;
        }
        let mut best: Option<(usize, W)> = None;
        for v in 0..self.num_vars {
            if self.value[v] != UNASSIGNED {
                continue;
            }
            let mut s = self.weight[2 * v].clone();
            s.add_to(&self.weight[2 * v + 1]);
            let better = match &best {
                None => true,
                Some((_, b)) => cmp_weight(&s, b).is_gt(),
            };
            if better {
                best = Some((v, s));
            }
        }
        let (mut v, s) = best?;
        if s.is_zero() {
            // Only possible when every weight underflowed; fall back to the
            // smallest free variable of an unsatisfied clause.
            v = (0..self.num_clauses() as u32)
                .filter(|&c| self.sat[c as usize] == 0)
                .flat_map(|c| self.clause(c).iter().copied())
                .filter(|&y| self.lit_value(y) == UNASSIGNED)
                .map(|y| (y >> 1) as usize)
                .min()?;
        }
        let pos = &self.weight[2 * v];
        let neg = &self.weight[2 * v + 1];
        Some(if cmp_weight(pos, neg).is_ge() { 2 * v as u32 } else { 2 * v as u32 + 1 })
    }

    /// Branching literal after assuming `assumptions` and propagating;
    /// `None` on conflict or when everything is satisfied.
    pub fn branch_literal(&mut self, assumptions: &[Literal]) -> Result<Option<Literal>> {
        if !self.set_assumptions(assumptions)? {
            return Ok(None);
        }
        Ok(self.choose().map(literal_of))
    }

    fn current_assignment(&self) -> Assignment {
        self.value
            .iter()
            .map(|&v| match v {
                UNASSIGNED => None,
                v => Some(v > 0),
            })
            .collect()
    }

    fn search_state(&self) -> SearchState {
        SearchState::new(
            self.decisions.iter().map(|d| (literal_of(d.code), d.flipped)).collect(),
        )
    }

    fn push_decision(&mut self, code: u32, flipped: bool) {
        self.decisions.push(Decision { code, flipped, trail_start: self.trail.len() });
        self.stats.nodes += 1;
        self.stats.max_depth = self.stats.max_depth.max(self.decisions.len());
        self.assign(code);
    }

    /// Backtracks to the deepest unflipped decision and takes its second
    /// branch. False when the tree below the root is exhausted.
    fn backtrack(&mut self) -> bool {
        while let Some(d) = self.decisions.pop() {
            self.undo_to(d.trail_start);
            if !d.flipped {
                self.push_decision(d.code ^ 1, true);
                return true;
            }
        }
        self.undo_to(self.root_len);
        false
    }

    fn replay(&mut self, state: &SearchState) -> Result<()> {
        for &(lit, flipped) in state.pairs() {
            if lit.var() > self.num_vars {
                return Err(Error::input(format!("checkpoint literal {lit} beyond formula")));
            }
            if !self.propagate() || self.lit_value(code_of(lit)) != UNASSIGNED {
                return Err(Error::input(format!(
                    "checkpoint does not match the formula at decision {lit}"
                )));
            }
            self.push_decision(code_of(lit), flipped);
        }
        Ok(())
    }

    /// Core loop. `on_model` is called for each satisfying residual state;
    /// returning true stops the search with SAT, false continues (the model
    /// is treated as a refuted leaf).
    fn run(
        &mut self,
        limits: &Limits,
        mut on_model: impl FnMut(&Self) -> bool,
    ) -> Outcome {
        let t0 = Instant::now();
        let node_base = self.stats.nodes;
        let mut check = 0u32;
        loop {
            check += 1;
            if check >= 256 {
                check = 0;
                let cancelled = limits.cancel.is_some_and(|c| c.load(Ordering::Relaxed));
                let timed_out = limits.max_time.is_some_and(|m| t0.elapsed() >= m);
                if cancelled || timed_out {
                    return Outcome::Indeterminate(self.search_state());
                }
            }
            if limits.max_nodes.is_some_and(|m| self.stats.nodes - node_base >= m) {
                return Outcome::Indeterminate(self.search_state());
            }
            if !self.propagate() {
                if !self.backtrack() {
                    return Outcome::Unsat;
                }
                continue;
            }
            match self.choose() {
                None => {
                    if on_model(self) {
                        return Outcome::Sat(self.current_assignment());
                    }
                    if !self.backtrack() {
                        return Outcome::Unsat;
                    }
                }
                Some(code) => self.push_decision(code, false),
            }
        }
    }

    fn finish(&mut self, outcome: Outcome, started: Instant) -> SolveResult {
        self.stats.wall_time += started.elapsed();
        SolveResult { outcome, stats: self.stats.clone() }
    }

    /// Decides satisfiability.
    pub fn solve(&mut self, limits: &Limits) -> SolveResult {
        self.solve_under(&[], limits).expect("no assumptions, no input error")
    }

    /// Decides satisfiability of the formula under the assumption literals
    /// (a cube). The witness includes the assumptions.
    pub fn solve_under(&mut self, assumptions: &[Literal], limits: &Limits) -> Result<SolveResult> {
        let started = Instant::now();
        self.stats = SolveStats::default();
        if !self.set_assumptions(assumptions)? {
            return Ok(self.finish(Outcome::Unsat, started));
        }
        let outcome = self.run(limits, |_| true);
        Ok(self.finish(outcome, started))
    }

    /// Continues a search from a saved state (same formula, no assumptions).
    pub fn resume(&mut self, state: &SearchState, limits: &Limits) -> Result<SolveResult> {
        self.resume_under(&[], state, limits)
    }

    /// Continues a search under assumptions from a saved state.
    pub fn resume_under(
        &mut self,
        assumptions: &[Literal],
        state: &SearchState,
        limits: &Limits,
    ) -> Result<SolveResult> {
        let started = Instant::now();
        self.stats = SolveStats::default();
        if !self.set_assumptions(assumptions)? {
            return if state.is_empty() {
                Ok(self.finish(Outcome::Unsat, started))
            } else {
                Err(Error::input("checkpoint below contradictory assumptions"))
            };
        }
        self.replay(state)?;
        let outcome = self.run(limits, |_| true);
        Ok(self.finish(outcome, started))
    }

    /// Visits every satisfying partial assignment at the leaves of the
    /// search tree below the assumptions; the leaves' cubes are disjoint
    /// and cover all models.
    fn for_each_leaf(
        &mut self,
        assumptions: &[Literal],
        limits: &Limits,
        mut visit: impl FnMut(&Assignment),
    ) -> Result<Outcome> {
        self.stats = SolveStats::default();
        if !self.set_assumptions(assumptions)? {
            return Ok(Outcome::Unsat);
        }
        let outcome = self.run(limits, |s| {
            visit(&s.current_assignment());
            false
        });
        Ok(outcome)
    }

    /// All satisfying total assignments, sorted lexicographically (`false`
    /// before `true`, variable 1 most significant). `Err(Budget)` when the
    /// limits stop the search.
    pub fn enumerate(&mut self, limits: &Limits) -> Result<Vec<Vec<bool>>> {
        let mut out = Vec::new();
        let outcome = self.for_each_leaf(&[], limits, |a| expand_into(a, &mut out))?;
        if let Outcome::Indeterminate(_) = outcome {
            return Err(Error::Budget("enumeration stopped by limits".into()));
        }
        out.sort_unstable();
        Ok(out)
    }

    /// Number of satisfying total assignments under the assumptions
    /// (variables of the assumptions are fixed, all others count).
    pub fn count_models_under(&mut self, assumptions: &[Literal], limits: &Limits) -> Result<u128> {
        let mut count: u128 = 0;
        let mut overflow = false;
        let outcome = self.for_each_leaf(assumptions, limits, |a| {
            let free = a.iter().filter(|v| v.is_none()).count();
            match 1u128.checked_shl(free as u32).and_then(|x| count.checked_add(x)) {
                Some(c) if free < 128 => count = c,
                _ => overflow = true,
            }
        })?;
        if let Outcome::Indeterminate(_) = outcome {
            return Err(Error::Budget("model counting stopped by limits".into()));
        }
        if overflow {
            return Err(Error::input("model count exceeds 2^128"));
        }
        Ok(count)
    }

    pub fn count_models(&mut self, limits: &Limits) -> Result<u128> {
        self.count_models_under(&[], limits)
    }

    /// The depth-`level` frontier of the search tree below `assumptions`.
    /// Refuted branches are dropped. A branch whose residual formula is
    /// already satisfied above `level` is returned as a shorter cube.
    pub(crate) fn frontier(&mut self, level: usize) -> Vec<Vec<Literal>> {
        let mut out = Vec::new();
        self.reset_root();
        if !self.propagate() {
            return out;
        }
        self.root_len = self.trail.len();
        self.frontier_rec(level, &mut Vec::new(), &mut out);
        self.reset_root();
        out
    }

    fn frontier_rec(&mut self, level: usize, path: &mut Vec<Literal>, out: &mut Vec<Vec<Literal>>) {
        if path.len() == level {
            out.push(path.clone());
            return;
        }
        let Some(code) = self.choose() else {
            out.push(path.clone());
            return;
        };
        for branch in [code, code ^ 1] {
            let mark = self.trail.len();
            self.stats.nodes += 1;
            self.assign(branch);
            if self.propagate() {
                path.push(literal_of(branch));
                self.frontier_rec(level, path, out);
                path.pop();
            }
            self.undo_to(mark);
        }
    }
}

fn expand_into(partial: &Assignment, out: &mut Vec<Vec<bool>>) {
    let free: Vec<usize> = (0..partial.len()).filter(|&i| partial[i].is_none()).collect();
    let base: Vec<bool> = partial.iter().map(|v| v.unwrap_or(false)).collect();
    for mask in 0u64..(1u64 << free.len()) {
        let mut a = base.clone();
        for (j, &i) in free.iter().enumerate() {
            a[i] = mask >> (free.len() - 1 - j) & 1 == 1;
        }
        out.push(a);
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cnf::encode_vdw;
    use num_rational::BigRational;

    fn f(n: usize, cls: &[&[i32]]) -> CnfFormula {
        CnfFormula::from_ints(n, cls)
    }

    #[test]
    fn small_verdicts() {
        let mut s = Solver::<Dyadic>::new(&f(2, &[&[1, 2], &[-1], &[-2]])).unwrap();
        assert!(s.solve(&Limits::none()).is_unsat());
        let mut s = Solver::<Dyadic>::new(&f(2, &[&[1, 2], &[-1]])).unwrap();
        let r = s.solve(&Limits::none());
        assert_eq!(r.witness().unwrap(), &vec![Some(false), Some(true)]);
        let mut s = Solver::<Dyadic>::new(&f(0, &[])).unwrap();
        assert_eq!(s.solve(&Limits::none()).witness().unwrap(), &Vec::<Option<bool>>::new());
        let mut s = Solver::<Dyadic>::new(&f(1, &[&[]])).unwrap();
        assert!(s.solve(&Limits::none()).is_unsat());
    }

    #[test]
    fn vdw_3_3() {
        let mut s = Solver::<Dyadic>::new(&encode_vdw(3, 3, 8).unwrap()).unwrap();
        assert!(s.solve(&Limits::none()).is_sat());
        let mut s = Solver::<Dyadic>::new(&encode_vdw(3, 3, 9).unwrap()).unwrap();
        assert!(s.solve(&Limits::none()).is_unsat());
    }

    #[test]
    fn enumerate_vdw_3_3_8() {
        let mut s = Solver::<Dyadic>::new(&encode_vdw(3, 3, 8).unwrap()).unwrap();
        let all = s.enumerate(&Limits::none()).unwrap();
        let strs: Vec<String> = all
            .iter()
            .map(|a| a.iter().map(|&b| if b { '1' } else { '0' }).collect())
            .collect();
        assert!(strs.contains(&"01100110".to_string()));
        assert!(strs.contains(&"00110011".to_string()));
        assert_eq!(strs.len(), 6);
        assert_eq!(s.count_models(&Limits::none()).unwrap(), 6);
    }

    #[test]
    fn budget_and_resume() {
        let formula = encode_vdw(3, 4, 18).unwrap();
        let mut s = Solver::<Dyadic>::new(&formula).unwrap();
        let straight = s.solve(&Limits::none());
        assert!(straight.is_unsat());
        let total = straight.stats.nodes;
        let mut s = Solver::<Dyadic>::new(&formula).unwrap();
        let r = s.solve(&Limits::nodes(total / 2));
        let Outcome::Indeterminate(state) = r.outcome else { panic!("expected budget stop") };
        let mut s2 = Solver::<Dyadic>::new(&formula).unwrap();
        let r2 = s2.resume(&state, &Limits::none()).unwrap();
        assert!(r2.is_unsat());
    }

    #[test]
    fn weight_types_agree_on_trees() {
        let formula = encode_vdw(3, 4, 17).unwrap();
        let a = Solver::<Dyadic>::new(&formula).unwrap().solve(&Limits::none());
        let b = Solver::<f64>::new(&formula).unwrap().solve(&Limits::none());
        let c = Solver::<BigRational>::new(&formula).unwrap().solve(&Limits::none());
        assert_eq!(a.stats.nodes, b.stats.nodes);
        assert_eq!(a.stats.nodes, c.stats.nodes);
        assert_eq!(a.witness(), c.witness());
    }

    #[test]
    fn assumptions() {
        let formula = encode_vdw(3, 3, 8).unwrap();
        let mut s = Solver::<Dyadic>::new(&formula).unwrap();
        // 01100110 and its reverse 01100110 start with 0; with var 1 true we
        // need the complements 10011001.
        let r = s.solve_under(&[Literal::new(1)], &Limits::none()).unwrap();
        assert!(r.is_sat());
        assert_eq!(r.witness().unwrap()[0], Some(true));
        let r = s
            .solve_under(&[Literal::new(1), Literal::new(2), Literal::new(3)], &Limits::none())
            .unwrap();
        assert!(r.is_unsat());
    }
}
