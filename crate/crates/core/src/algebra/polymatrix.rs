//! Square matrices with [`BiLaurent`] entries: transition matrices and
//! changes of frame.

use std::fmt;

use super::laurent::BiLaurent;
use super::rational::Rational;
use super::AlgebraError;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PolyMatrix {
    size: usize,
    entries: Vec<BiLaurent>,
}

impl PolyMatrix {
    pub fn from_rows(rows: Vec<Vec<BiLaurent>>) -> Result<Self, AlgebraError> {
        let size = rows.len();
        if rows.iter().any(|r| r.len() != size) {
            return Err(AlgebraError::NotSquare);
        }
        Ok(PolyMatrix { size, entries: rows.into_iter().flatten().collect() })
    }

    pub fn identity(size: usize) -> Self {
        Self::diagonal((0..size).map(|_| BiLaurent::one()).collect())
    }

    pub fn diagonal(diag: Vec<BiLaurent>) -> Self {
        let size = diag.len();
        let mut entries = vec![BiLaurent::zero(); size * size];
        for (i, d) in diag.into_iter().enumerate() {
            entries[i * size + i] = d;
        }
        PolyMatrix { size, entries }
    }

    /// The 1x1 matrix `(p)`.
    pub fn scalar(p: BiLaurent) -> Self {
        PolyMatrix { size: 1, entries: vec![p] }
    }

    pub fn size(&self) -> usize {
        self.size
    }

    pub fn get(&self, r: usize, c: usize) -> &BiLaurent {
        &self.entries[r * self.size + c]
    }

    pub fn set(&mut self, r: usize, c: usize, p: BiLaurent) {
        self.entries[r * self.size + c] = p;
    }

    pub fn entries(&self) -> impl Iterator<Item = &BiLaurent> {
        self.entries.iter()
    }

    pub fn rows(&self) -> Vec<Vec<BiLaurent>> {
        self.entries.chunks(self.size).map(<[BiLaurent]>::to_vec).collect()
    }

    pub fn map(&self, f: impl Fn(&BiLaurent) -> BiLaurent) -> PolyMatrix {
        PolyMatrix { size: self.size, entries: self.entries.iter().map(f).collect() }
    }

    pub fn try_map(
        &self,
        f: impl Fn(&BiLaurent) -> Result<BiLaurent, AlgebraError>,
    ) -> Result<PolyMatrix, AlgebraError> {
        Ok(PolyMatrix {
            size: self.size,
            entries: self.entries.iter().map(f).collect::<Result<_, _>>()?,
        })
    }

    pub fn mul(&self, other: &PolyMatrix) -> Result<PolyMatrix, AlgebraError> {
        if self.size != other.size {
            return Err(AlgebraError::DimensionMismatch);
        }
        let n = self.size;
        let mut entries = Vec::with_capacity(n * n);
        for r in 0..n {
            for c in 0..n {
                let mut acc = BiLaurent::zero();
                for k in 0..n {
                    acc = acc.checked_add(&self.get(r, k).checked_mul(other.get(k, c))?)?;
                }
                entries.push(acc);
            }
        }
        Ok(PolyMatrix { size: n, entries })
    }

    pub fn sub(&self, other: &PolyMatrix) -> Result<PolyMatrix, AlgebraError> {
        if self.size != other.size {
            return Err(AlgebraError::DimensionMismatch);
        }
        Ok(PolyMatrix {
            size: self.size,
            entries: self
                .entries
                .iter()
                .zip(&other.entries)
                .map(|(a, b)| a.checked_sub(b))
                .collect::<Result<_, _>>()?,
        })
    }

    /// `M * v`.
    pub fn apply(&self, v: &[BiLaurent]) -> Result<Vec<BiLaurent>, AlgebraError> {
        if v.len() != self.size {
            return Err(AlgebraError::DimensionMismatch);
        }
        (0..self.size)
            .map(|r| {
                v.iter().enumerate().try_fold(BiLaurent::zero(), |acc, (c, x)| {
                    acc.checked_add(&self.get(r, c).checked_mul(x)?)
                })
            })
            .collect()
    }

    fn minor(&self, skip_r: usize, skip_c: usize) -> PolyMatrix {
        let n = self.size;
        let mut entries = Vec::with_capacity((n - 1) * (n - 1));
        for r in (0..n).filter(|&r| r != skip_r) {
            for c in (0..n).filter(|&c| c != skip_c) {
                entries.push(self.get(r, c).clone());
            }
        }
        PolyMatrix { size: n - 1, entries }
    }

    /// Determinant by cofactor expansion along the first row.
    pub fn det(&self) -> BiLaurent {
        match self.size {
            0 => BiLaurent::one(),
            1 => self.entries[0].clone(),
            2 => self.get(0, 0) * self.get(1, 1) - self.get(0, 1) * self.get(1, 0),
            n => {
                let mut acc = BiLaurent::zero();
                for c in 0..n {
                    if self.get(0, c).is_zero() {
                        continue;
                    }
                    let term = self.get(0, c) * self.minor(0, c).det();
                    acc = if c % 2 == 0 { acc + term } else { acc - term };
                }
                acc
            }
        }
    }

    /// `(c, a)` when the determinant is `c * z^a`, i.e. a unit on the overlap.
    pub fn unit_determinant(&self) -> Option<(Rational, i64)> {
        let det = self.det();
        let (m, c) = det.as_monomial()?;
        (m.u == 0).then(|| (c.clone(), m.z))
    }

    pub fn adjugate(&self) -> PolyMatrix {
        let n = self.size;
        if n == 1 {
            return PolyMatrix::identity(1);
        }
        let mut entries = Vec::with_capacity(n * n);
        for r in 0..n {
            for c in 0..n {
                let cof = self.minor(c, r).det();
                entries.push(if (r + c) % 2 == 0 { cof } else { -cof });
            }
        }
        PolyMatrix { size: n, entries }
    }

    /// Inverse over the Laurent ring; requires a unit-monomial determinant.
    pub fn inverse(&self) -> Result<PolyMatrix, AlgebraError> {
        let (c, a) = self.unit_determinant().ok_or(AlgebraError::NonUnitDeterminant)?;
        let inv_det = BiLaurent::term(c.recip(), -a, 0);
        Ok(self.adjugate().map(|e| e * &inv_det))
    }

    /// Largest and smallest first-variable exponent over all entries.
    pub fn z_degree_range(&self) -> Option<(i64, i64)> {
        let lo = self.entries.iter().filter_map(BiLaurent::min_z).min()?;
        let hi = self.entries.iter().filter_map(BiLaurent::max_z).max()?;
        Some((lo, hi))
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(BiLaurent::is_zero)
    }

    pub fn is_first_only(&self) -> bool {
        self.entries.iter().all(BiLaurent::is_first_only)
    }

    /// Exponent of the determinant's single term, if it is a unit.
    pub fn det_degree(&self) -> Option<i64> {
        self.unit_determinant().map(|(_, a)| a)
    }
}

impl fmt::Display for PolyMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rows: Vec<String> = self
            .rows()
            .iter()
            .map(|r| format!("[{}]", r.iter().map(ToString::to_string).collect::<Vec<_>>().join(", ")))
            .collect();
        write!(f, "[{}]", rows.join(", "))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::rational::int;

    fn p(s: &str) -> BiLaurent {
        s.parse().unwrap()
    }

    #[test]
    fn triangular_determinant_and_inverse() {
        let j = PolyMatrix::from_rows(vec![vec![p("-z^-2"), p("0")], vec![p("2*z*u"), p("z^2")]]).unwrap();
        assert_eq!(j.det(), p("-1"));
        assert_eq!(j.unit_determinant(), Some((int(-1), 0)));
        let inv = j.inverse().unwrap();
        assert_eq!(j.mul(&inv).unwrap(), PolyMatrix::identity(2));
        assert_eq!(inv.mul(&j).unwrap(), PolyMatrix::identity(2));
    }

    #[test]
    fn non_unit_determinant() {
        let m = PolyMatrix::from_rows(vec![vec![p("1 + z"), p("0")], vec![p("0"), p("1")]]).unwrap();
        assert_eq!(m.inverse(), Err(AlgebraError::NonUnitDeterminant));
    }

    #[test]
    fn three_by_three_inverse() {
        let m = PolyMatrix::from_rows(vec![
            vec![BiLaurent::mono(1, 0), p("u"), p("z^-1")],
            vec![p("0"), BiLaurent::mono(-1, 0), p("z*u")],
            vec![p("0"), p("0"), p("2")],
        ])
        .unwrap();
        assert_eq!(m.det(), p("2"));
        assert_eq!(m.mul(&m.inverse().unwrap()).unwrap(), PolyMatrix::identity(3));
    }

    #[test]
    fn ragged_rows_rejected() {
        assert_eq!(PolyMatrix::from_rows(vec![vec![p("1")], vec![]]), Err(AlgebraError::NotSquare));
    }
}
