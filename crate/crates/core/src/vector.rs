//! Dense max-plus vectors, scaling, residuation and span membership.

use std::fmt;

use crate::error::{Error, Result};
use crate::scalar::ExtReal;

/// Dense vector over ℝ ∪ {−∞}.
///
/// Ordering is lexicographic with −∞ below every finite entry, which is the
/// canonical order used for basis output.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct MpVector(Vec<ExtReal>);

impl MpVector {
    pub fn new(entries: Vec<ExtReal>) -> Self {
        MpVector(entries)
    }

    /// Convenience constructor; `None` entries are −∞.
    pub fn from_ints(entries: &[Option<i64>]) -> Self {
        MpVector(
            entries
                .iter()
                .map(|e| e.map_or(ExtReal::NegInf, ExtReal::from_int))
                .collect(),
        )
    }

    /// The all −∞ vector of length `n`.
    pub fn neg_inf(n: usize) -> Self {
        MpVector(vec![ExtReal::NegInf; n])
    }

    /// Unit vector `e^i` (0-based `i`): 0 at `i`, −∞ elsewhere.
    pub fn unit(n: usize, i: usize) -> Self {
        let mut v = Self::neg_inf(n);
        v.0[i] = ExtReal::zero();
        v
    }

    /// Vector with a single finite entry `value` at `i`.
    pub fn single(n: usize, i: usize, value: ExtReal) -> Self {
        let mut v = Self::neg_inf(n);
        v.0[i] = value;
        v
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn entries(&self) -> &[ExtReal] {
        &self.0
    }

    pub fn get(&self, i: usize) -> &ExtReal {
        &self.0[i]
    }

    pub fn set(&mut self, i: usize, value: ExtReal) {
        self.0[i] = value;
    }

    pub fn into_entries(self) -> Vec<ExtReal> {
        self.0
    }

    /// At least one finite entry.
    pub fn is_proper(&self) -> bool {
        self.0.iter().any(ExtReal::is_finite)
    }

    /// Indices of the finite entries, ascending.
    pub fn support(&self) -> Vec<usize> {
        self.0
            .iter()
            .enumerate()
            .filter_map(|(j, x)| x.is_finite().then_some(j))
            .collect()
    }

    fn check_len(&self, other: &MpVector) -> Result<()> {
        if self.len() != other.len() {
            return Err(Error::DimensionMismatch {
                expected: self.len(),
                found: other.len(),
            });
        }
        Ok(())
    }

    /// Entrywise maximum `self ⊕ other`.
    pub fn join(&self, other: &MpVector) -> Result<MpVector> {
        self.check_len(other)?;
        Ok(MpVector(
            self.0.iter().zip(&other.0).map(|(a, b)| a.oplus(b)).collect(),
        ))
    }

    /// `c ⊗ self`.
    pub fn scale(&self, c: &ExtReal) -> MpVector {
        MpVector(self.0.iter().map(|x| c.otimes(x)).collect())
    }

    /// Entrywise `self ≤ other`.
    pub fn le(&self, other: &MpVector) -> Result<bool> {
        self.check_len(other)?;
        Ok(self.0.iter().zip(&other.0).all(|(a, b)| a <= b))
    }

    /// `‖self‖ = max_i self_i`.
    pub fn norm(&self) -> ExtReal {
        self.0.iter().max().cloned().unwrap_or(ExtReal::NegInf)
    }

    /// Returns `(‖x‖, (−‖x‖) ⊗ x)`; the second component has maximum entry 0.
    pub fn norm_and_scale(&self) -> Result<(ExtReal, MpVector)> {
        let norm = self.norm();
        let inv = norm.inverse().ok_or(Error::ImproperVector)?;
        Ok((norm, self.scale(&inv)))
    }

    /// The scaled representative `(−‖x‖) ⊗ x`.
    pub fn scaled(&self) -> Result<MpVector> {
        self.norm_and_scale().map(|(_, v)| v)
    }

    /// Whether the maximum entry is exactly 0.
    pub fn is_scaled(&self) -> bool {
        self.norm() == ExtReal::zero()
    }
}

impl fmt::Display for MpVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (j, x) in self.0.iter().enumerate() {
            if j > 0 {
                f.write_str(" ")?;
            }
            write!(f, "{x}")?;
        }
        Ok(())
    }
}

/// Largest `α` with `α ⊗ w ≤ v`: the minimum of `v_j − w_j` over the support
/// of `w`, or −∞ when that support is not contained in the support of `v`.
pub fn residual(v: &MpVector, w: &MpVector) -> Result<ExtReal> {
    v.check_len(w)?;
    let mut best: Option<ExtReal> = None;
    for (vj, wj) in v.0.iter().zip(&w.0) {
        if let ExtReal::Finite(wj) = wj {
            let diff = vj.minus_finite(wj);
            if diff.is_neg_inf() {
                return Ok(ExtReal::NegInf);
            }
            best = Some(match best {
                Some(b) if b <= diff => b,
                _ => diff,
            });
        }
    }
    best.ok_or(Error::ImproperVector)
}

/// Principal solution `⊕_w residual(v, w) ⊗ w`. Improper generators are skipped.
pub fn principal_combination<'a, I>(v: &MpVector, generators: I) -> Result<MpVector>
where
    I: IntoIterator<Item = &'a MpVector>,
{
    let mut acc = MpVector::neg_inf(v.len());
    for w in generators {
        if !w.is_proper() {
            v.check_len(w)?;
            continue;
        }
        let alpha = residual(v, w)?;
        if alpha.is_finite() {
            acc = acc.join(&w.scale(&alpha))?;
        }
    }
    Ok(acc)
}

/// Whether `v` is a max-combination of `generators`.
///
/// The principal combination is always `≤ v`; it equals `v` exactly when some
/// combination does.
pub fn in_span<'a, I>(v: &MpVector, generators: I) -> Result<bool>
where
    I: IntoIterator<Item = &'a MpVector>,
{
    if !v.is_proper() {
        return Err(Error::ImproperVector);
    }
    Ok(principal_combination(v, generators)? == *v)
}
