use super::{Poly, Ring};

/// Power series in `q` known modulo `q^order`.
///
/// Binary operations between series of different orders truncate to the
/// smaller order; the result records the order it is valid to.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct TruncSeries<T> {
    coeffs: Vec<T>,
}

impl<T: Ring> TruncSeries<T> {
    /// Series whose order is `coeffs.len()`.
    pub fn new(coeffs: Vec<T>) -> Self {
        TruncSeries { coeffs }
    }

    pub fn zero(order: usize) -> Self {
        TruncSeries {
            coeffs: vec![T::zero(); order],
        }
    }

    pub fn one(order: usize) -> Self {
        let mut s = Self::zero(order);
        if order > 0 {
            s.coeffs[0] = T::one();
        }
        s
    }

    pub fn from_poly(p: &Poly<T>, order: usize) -> Self {
        TruncSeries {
            coeffs: (0..order).map(|i| p.coeff(i)).collect(),
        }
    }

    pub fn order(&self) -> usize {
        self.coeffs.len()
    }

    pub fn coeffs(&self) -> &[T] {
        &self.coeffs
    }

    pub fn coeffs_mut(&mut self) -> &mut [T] {
        &mut self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<T> {
        self.coeffs
    }

    pub fn coeff(&self, i: usize) -> &T {
        &self.coeffs[i]
    }

    pub fn truncate(&mut self, order: usize) {
        self.coeffs.truncate(order);
    }

    pub fn truncated(&self, order: usize) -> Self {
        TruncSeries {
            coeffs: self.coeffs[..order.min(self.order())].to_vec(),
        }
    }

    /// Index of the first nonzero coefficient, `None` if all known ones vanish.
    pub fn valuation(&self) -> Option<usize> {
        self.coeffs.iter().position(|c| !c.is_zero())
    }

    pub fn add(&self, other: &Self) -> Self {
        let n = self.order().min(other.order());
        TruncSeries {
            coeffs: (0..n).map(|i| self.coeffs[i].clone() + &other.coeffs[i]).collect(),
        }
    }

    pub fn sub(&self, other: &Self) -> Self {
        let n = self.order().min(other.order());
        TruncSeries {
            coeffs: (0..n).map(|i| self.coeffs[i].clone() - &other.coeffs[i]).collect(),
        }
    }

    pub fn neg(&self) -> Self {
        TruncSeries {
            coeffs: self.coeffs.iter().map(|c| -c.clone()).collect(),
        }
    }

    pub fn scale(&self, c: &T) -> Self {
        TruncSeries {
            coeffs: self.coeffs.iter().map(|a| a.clone() * c).collect(),
        }
    }

    pub fn add_assign(&mut self, other: &Self) {
        self.coeffs.truncate(other.order());
        for (a, b) in self.coeffs.iter_mut().zip(&other.coeffs) {
            *a = std::mem::replace(a, T::zero()) + b;
        }
    }

    pub fn mul(&self, other: &Self) -> Self {
        let n = self.order().min(other.order());
        let mut out = vec![T::zero(); n];
        for (i, a) in self.coeffs.iter().take(n).enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().take(n - i).enumerate() {
                out[i + j] = std::mem::replace(&mut out[i + j], T::zero()) + &(a.clone() * b);
            }
        }
        TruncSeries { coeffs: out }
    }

    /// Multiply by a polynomial, keeping this series' order.
    pub fn mul_poly(&self, p: &Poly<T>) -> Self {
        self.mul(&Self::from_poly(p, self.order()))
    }
}
