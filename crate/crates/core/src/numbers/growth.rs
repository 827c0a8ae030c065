//! Checks of the tabulated `w(2;3,t)` against quadratic growth bounds.

use num_rational::Rational64;
use num_traits::{FromPrimitive, Num};
use serde::{Deserialize, Serialize};

use super::known::{Status, VdwEntry};

/// Per-`t` line of the report.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct GrowthRow<S> {
    pub t: usize,
    pub w: usize,
    pub status: Status,
    /// `w > t^2`.
    pub exceeds_t_squared: bool,
    /// `w > t^2` with `t >= 5`, the range in which `w <= t^2` was
    /// conjectured (it fails at `t = 4`, `w = 18`).
    pub refutes_square_bound: bool,
    /// `1.675 (t^2 - t) - 1.05`.
    pub bound: S,
    pub within_bound: bool,
    /// `w(t) - w(t-1)` when both are tabulated.
    pub difference: Option<i64>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct GrowthReport<S> {
    pub rows: Vec<GrowthRow<S>>,
}

impl<S> GrowthReport<S> {
    /// The `t >= 5` with `w > t^2`.
    pub fn square_bound_violations(&self) -> Vec<usize> {
        self.rows.iter().filter(|r| r.refutes_square_bound).map(|r| r.t).collect()
    }

    pub fn all_within_bound(&self) -> bool {
        self.rows.iter().all(|r| r.within_bound)
    }
}

/// Smallest `t` for which `w(2;3,t) <= t^2` was conjectured.
pub const SQUARE_BOUND_FROM: usize = 5;

/// Evaluates the bounds in the scalar `S`; the quadratic bound is formed as
/// `(67 (t^2 - t) - 42) / 40` so that it is exact in any scalar that
/// represents the quotient exactly.
pub fn check_growth_bounds_with<S>(values: &[VdwEntry]) -> GrowthReport<S>
where
    S: Num + FromPrimitive + PartialOrd + Clone,
{
    let mut sorted = values.to_vec();
    sorted.sort_by_key(|e| e.t);
    let rows = sorted
        .iter()
        .enumerate()
        .map(|(i, e)| {
            let t = e.t as i64;
            let num = S::from_i64(67 * (t * t - t) - 42).expect("small integer");
            let bound = num / S::from_i64(40).expect("small integer");
            let w = S::from_usize(e.value).expect("small integer");
            let difference = i
                .checked_sub(1)
                .map(|j| sorted[j])
                .filter(|prev| prev.t + 1 == e.t)
                .map(|prev| e.value as i64 - prev.value as i64);
            GrowthRow {
                t: e.t,
                w: e.value,
                status: e.status,
                exceeds_t_squared: e.value > e.t * e.t,
                refutes_square_bound: e.t >= SQUARE_BOUND_FROM && e.value > e.t * e.t,
                within_bound: w <= bound,
                bound,
                difference,
            }
        })
        .collect();
    GrowthReport { rows }
}

/// [`check_growth_bounds_with`] in exact rational arithmetic.
pub fn check_growth_bounds(values: &[VdwEntry]) -> GrowthReport<Rational64> {
    check_growth_bounds_with(values)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::numbers::known_values;

    #[test]
    fn t_squared_refuted_exactly_24_to_30() {
        let r = check_growth_bounds(&known_values().vdw);
        assert_eq!(r.square_bound_violations(), (24..=30).collect::<Vec<_>>());
        assert!(r.rows[1].exceeds_t_squared && !r.rows[1].refutes_square_bound);
        assert!(r.all_within_bound());
        let t16 = r.rows.iter().find(|r| r.t == 16).unwrap();
        assert!(!t16.exceeds_t_squared);
        let t3 = &r.rows[0];
        assert_eq!(t3.bound, Rational64::from_integer(9));
        assert_eq!(r.rows[1].difference, Some(9));
        assert_eq!(t3.difference, None);
    }

    #[test]
    fn float_scalar_agrees() {
        let v = known_values().vdw;
        let exact = check_growth_bounds(&v);
        let float: GrowthReport<f64> = check_growth_bounds_with(&v);
        for (a, b) in exact.rows.iter().zip(&float.rows) {
            assert_eq!(a.within_bound, b.within_bound);
        }
        let above = [VdwEntry { t: 3, value: 10, status: Status::LowerBound }];
        assert!(!check_growth_bounds(&above).all_within_bound());
    }
}
