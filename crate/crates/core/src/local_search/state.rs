//! Flip bookkeeping shared by the local-search schemes.
//!
//! Per clause: the number of true literals and the sum of the variables of
//! the true literals (so a clause with exactly one true literal names its
//! critical variable without a scan). Per variable: `make` (falsified
//! clauses it would satisfy) and `brk` (clauses it alone satisfies).

use crate::cnf::CnfFormula;

#[derive(Clone)]
pub(crate) struct LsState {
    pub num_vars: usize,
    /// Clause literals as (0-based variable, positive).
    lits: Vec<(u32, bool)>,
    start: Vec<u32>,
    /// Per variable: (clause, literal positive) occurrences.
    occ: Vec<Vec<(u32, bool)>>,
    true_count: Vec<u32>,
    true_sum: Vec<u64>,
    pub make: Vec<i64>,
    pub brk: Vec<i64>,
    pub assignment: Vec<bool>,
    /// Falsified clauses with positions for O(1) removal.
    pub falsified: Vec<u32>,
    pos_in_falsified: Vec<u32>,
    has_empty_clause: bool,
}

const NOT_FALSIFIED: u32 = u32::MAX;

impl LsState {
    pub fn new(formula: &CnfFormula) -> Self {
        let n = formula.num_vars;
        let mut lits = Vec::new();
        let mut start = vec![0u32];
        let mut occ = vec![Vec::new(); n];
        let mut has_empty_clause = false;
        for c in &formula.clauses {
            let mut cl: Vec<(u32, bool)> =
                c.iter().map(|l| ((l.var() - 1) as u32, l.is_positive())).collect();
            cl.sort_unstable();
            cl.dedup();
            if cl.windows(2).any(|w| w[0].0 == w[1].0) {
                continue; // tautology
            }
            if cl.is_empty() {
                has_empty_clause = true;
            }
            let idx = (start.len() - 1) as u32;
            for &(v, p) in &cl {
                occ[v as usize].push((idx, p));
            }
            lits.extend_from_slice(&cl);
            start.push(lits.len() as u32);
        }
        let m = start.len() - 1;
        LsState {
            num_vars: n,
            lits,
            start,
            occ,
            true_count: vec![0; m],
            true_sum: vec![0; m],
            make: vec![0; n],
            brk: vec![0; n],
            assignment: vec![false; n],
            falsified: Vec::new(),
            pos_in_falsified: vec![NOT_FALSIFIED; m],
            has_empty_clause,
        }
    }

    pub fn has_empty_clause(&self) -> bool {
        self.has_empty_clause
    }

    #[inline]
    pub fn clause(&self, c: u32) -> &[(u32, bool)] {
        &self.lits[self.start[c as usize] as usize..self.start[c as usize + 1] as usize]
    }

    /// Resets to `assignment` and recomputes all counters.
    pub fn load(&mut self, assignment: &[bool]) {
        debug_assert_eq!(assignment.len(), self.num_vars);
        self.assignment.copy_from_slice(assignment);
        self.make.iter_mut().for_each(|x| *x = 0);
        self.brk.iter_mut().for_each(|x| *x = 0);
        self.falsified.clear();
        for c in 0..self.true_count.len() {
            let (mut cnt, mut sum) = (0u32, 0u64);
            for &(v, p) in self.clause(c as u32) {
                if self.assignment[v as usize] == p {
                    cnt += 1;
                    sum += v as u64;
                }
            }
            self.true_count[c] = cnt;
            self.true_sum[c] = sum;
            self.pos_in_falsified[c] = NOT_FALSIFIED;
            match cnt {
                0 => {
                    self.add_falsified(c as u32);
                    for i in self.start[c]..self.start[c + 1] {
                        let v = self.lits[i as usize].0;
                        self.make[v as usize] += 1;
                    }
                }
                1 => self.brk[sum as usize] += 1,
                _ => {}
            }
        }
    }

    fn add_falsified(&mut self, c: u32) {
        self.pos_in_falsified[c as usize] = self.falsified.len() as u32;
        self.falsified.push(c);
    }

    fn remove_falsified(&mut self, c: u32) {
        let pos = self.pos_in_falsified[c as usize] as usize;
        let last = self.falsified.pop().expect("clause is falsified");
        if last != c {
            self.falsified[pos] = last;
            self.pos_in_falsified[last as usize] = pos as u32;
        }
        self.pos_in_falsified[c as usize] = NOT_FALSIFIED;
    }

    pub fn num_falsified(&self) -> usize {
        self.falsified.len()
    }

    /// Change in the number of satisfied clauses if `v` is flipped.
    #[inline]
    pub fn score(&self, v: usize) -> i64 {
        self.make[v] - self.brk[v]
    }

    pub fn flip(&mut self, v: usize) {
        let new_val = !self.assignment[v];
        self.assignment[v] = new_val;
        for k in 0..self.occ[v].len() {
            let (c, positive) = self.occ[v][k];
            let ci = c as usize;
            if positive == new_val {
                // Literal became true.
                match self.true_count[ci] {
                    0 => {
                        self.remove_falsified(c);
                        for i in self.start[ci]..self.start[ci + 1] {
                            let u = self.lits[i as usize].0;
                            self.make[u as usize] -= 1;
                        }
                        self.brk[v] += 1;
                    }
                    1 => self.brk[self.true_sum[ci] as usize] -= 1,
                    _ => {}
                }
                self.true_count[ci] += 1;
                self.true_sum[ci] += v as u64;
            } else {
                self.true_count[ci] -= 1;
                self.true_sum[ci] -= v as u64;
                match self.true_count[ci] {
                    0 => {
                        self.add_falsified(c);
                        for i in self.start[ci]..self.start[ci + 1] {
                            let u = self.lits[i as usize].0;
                            self.make[u as usize] += 1;
                        }
                        self.brk[v] -= 1;
                    }
                    1 => self.brk[self.true_sum[ci] as usize] += 1,
                    _ => {}
                }
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cnf::encode_vdw;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn recount(f: &CnfFormula, a: &[bool]) -> (Vec<i64>, Vec<i64>, usize) {
        let mut fresh = LsState::new(f);
        fresh.load(a);
        (fresh.make.clone(), fresh.brk.clone(), fresh.num_falsified())
    }

    #[test]
    fn incremental_matches_recount() {
        let f = encode_vdw(3, 5, 20).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        let a: Vec<bool> = (0..20).map(|_| rng.gen()).collect();
        let mut s = LsState::new(&f);
        s.load(&a);
        for _ in 0..500 {
            let v = rng.gen_range(0..20);
            s.flip(v);
            let (make, brk, nf) = recount(&f, &s.assignment);
            assert_eq!(s.make, make);
            assert_eq!(s.brk, brk);
            assert_eq!(s.num_falsified(), nf);
        }
    }
}
