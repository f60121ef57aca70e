//! Exact polynomial arithmetic in the ambient spaces `V_n`.
//!
//! A polynomial here is always tagged with the space `V_n` it lives in,
//! because the palindromic subspace `W_n` (coefficients symmetric under
//! `c_k <-> c_{n-k}`) and the even subspace `U_n` (odd-index coefficients
//! vanish) both depend on the ambient degree, not on the actual degree.
//! The transforms `S(p)(x) = p(x^2)` and `T(p)(x) = x^n p(x + x^{-1})` map
//! `V_n` into `V_2n`, and [`AmbientPolynomial::represent`] inverts `T∘S⁻¹`
//! on palindromic input by forward substitution on the unitriangular
//! coefficient-transfer matrix.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::{Error, ParseError};
use crate::matrix::IntMatrix;

/// Integer-coefficient polynomial tagged with its ambient space `V_n`.
///
/// `coeffs[k]` holds the coefficient of `x^(n-k)`, so the list always has
/// length `n + 1` and leading zeros are meaningful: `x` as an element of
/// `V_2` is `[0, 1, 0]` and is palindromic there, while `x` in `V_1` is
/// `[1, 0]` and is not.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct AmbientPolynomial {
    ambient_degree: usize,
    coeffs: Vec<BigInt>,
}

impl AmbientPolynomial {
    /// Builds a polynomial from descending-power coefficients.
    ///
    /// Panics if `coeffs.len() != ambient_degree + 1`; the tag and the
    /// coefficient list must always agree.
    pub fn new(ambient_degree: usize, coeffs: Vec<BigInt>) -> Self {
        assert_eq!(
            coeffs.len(),
            ambient_degree + 1,
            "ambient degree {} needs {} coefficients, got {}",
            ambient_degree,
            ambient_degree + 1,
            coeffs.len()
        );
        AmbientPolynomial {
            ambient_degree,
            coeffs,
        }
    }

    pub fn from_i64(ambient_degree: usize, coeffs: &[i64]) -> Self {
        Self::new(ambient_degree, coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    /// The zero polynomial of `V_n`.
    pub fn zero(ambient_degree: usize) -> Self {
        Self::new(ambient_degree, vec![BigInt::zero(); ambient_degree + 1])
    }

    /// The monomial `x^power` as an element of `V_n` (`power <= n`).
    pub fn monomial(ambient_degree: usize, power: usize) -> Self {
        assert!(power <= ambient_degree);
        let mut coeffs = vec![BigInt::zero(); ambient_degree + 1];
        coeffs[ambient_degree - power] = BigInt::one();
        Self::new(ambient_degree, coeffs)
    }

    pub fn ambient_degree(&self) -> usize {
        self.ambient_degree
    }

    /// Coefficient of `x^(n-k)`.
    pub fn coeff(&self, k: usize) -> &BigInt {
        &self.coeffs[k]
    }

    /// All coefficients, highest power first.
    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Zero::is_zero)
    }

    /// Horner evaluation at an integer point.
    pub fn eval(&self, x: &BigInt) -> BigInt {
        let mut acc = BigInt::zero();
        for c in &self.coeffs {
            acc = acc * x + c;
        }
        acc
    }

    /// Coefficientwise sum; both operands must share the ambient space.
    pub fn add(&self, rhs: &Self) -> Self {
        assert_eq!(self.ambient_degree, rhs.ambient_degree, "ambient mismatch");
        let coeffs = self
            .coeffs
            .iter()
            .zip(&rhs.coeffs)
            .map(|(a, b)| a + b)
            .collect();
        Self::new(self.ambient_degree, coeffs)
    }

    pub fn scale(&self, a: &BigInt) -> Self {
        let coeffs = self.coeffs.iter().map(|c| c * a).collect();
        Self::new(self.ambient_degree, coeffs)
    }

    /// Membership in `W_n`: `c_k == c_{n-k}` for all `k`.
    pub fn is_palindromic(&self) -> bool {
        let n = self.ambient_degree;
        (0..=n / 2).all(|k| self.coeffs[k] == self.coeffs[n - k])
    }

    /// Membership in `U_n`: every odd-index coefficient vanishes.
    pub fn is_even_space(&self) -> bool {
        self.coeffs.iter().skip(1).step_by(2).all(Zero::is_zero)
    }

    /// `S(p)(x) = p(x^2)`, an element of `U_{2n}`.
    pub fn s_transform(&self) -> AmbientPolynomial {
        let n = self.ambient_degree;
        let mut coeffs = vec![BigInt::zero(); 2 * n + 1];
        for (k, c) in self.coeffs.iter().enumerate() {
            coeffs[2 * k] = c.clone();
        }
        Self::new(2 * n, coeffs)
    }

    /// `T(p)(x) = x^n p(x + x^{-1})`, expanded and collected in `V_{2n}`.
    ///
    /// `p(x + x^{-1})` is accumulated as a Laurent polynomial with exponents
    /// in `[-n, n]`; multiplying by `x^n` shifts everything into `[0, 2n]`,
    /// and the index arithmetic asserts that no negative power survives.
    pub fn t_transform(&self) -> AmbientPolynomial {
        let n = self.ambient_degree;
        // laurent[t] is the coefficient of x^(t - n) in p(x + x^{-1}).
        let mut laurent = vec![BigInt::zero(); 2 * n + 1];
        for (k, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let m = n - k;
            // (x + x^{-1})^m = sum_i binom(m, i) x^(m - 2i)
            for i in 0..=m {
                let shifted = m as isize - 2 * i as isize + n as isize;
                assert!(
                    (0..=2 * n as isize).contains(&shifted),
                    "negative power left after multiplying by x^n"
                );
                laurent[shifted as usize] += c * binomial(m, i as isize);
            }
        }
        // After the x^n shift, laurent[t] is the coefficient of x^t.
        laurent.reverse();
        Self::new(2 * n, laurent)
    }

    /// The unique `q` with `p(x^2) = x^n q(x + x^{-1})`, for palindromic `p`.
    ///
    /// Solves the unitriangular system given by [`transfer_matrix`] by
    /// forward substitution, so integer input yields integer output; the
    /// result lies in `U_n`.
    pub fn represent(&self) -> Result<AmbientPolynomial, Error> {
        if !self.is_palindromic() {
            return Err(Error::NotPalindromic);
        }
        let n = self.ambient_degree;
        let h = n / 2;
        let m = transfer_matrix(n);
        let mut c = vec![BigInt::zero(); h + 1];
        for k in 0..=h {
            let mut v = self.coeffs[k].clone();
            for (j, cj) in c.iter().enumerate().take(k) {
                v -= m.get(k, j) * cj;
            }
            // The diagonal entry is 1, so no division happens.
            c[k] = v;
        }
        let mut coeffs = vec![BigInt::zero(); n + 1];
        for (j, cj) in c.into_iter().enumerate() {
            coeffs[2 * j] = cj;
        }
        Ok(Self::new(n, coeffs))
    }
}

impl fmt::Display for AmbientPolynomial {
    /// Text format: ambient degree, a pipe, then coefficients from the
    /// highest power down, e.g. `4 | 1 0 -2 0 1`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} |", self.ambient_degree)?;
        for c in &self.coeffs {
            write!(f, " {}", c)?;
        }
        Ok(())
    }
}

impl FromStr for AmbientPolynomial {
    type Err = ParseError;

    fn from_str(s: &str) -> Result<Self, ParseError> {
        let (head, tail) = s
            .split_once('|')
            .ok_or_else(|| ParseError::new(1, "expected `<ambient degree> | <coefficients>`"))?;
        let ambient: usize = head
            .trim()
            .parse()
            .map_err(|_| ParseError::new(1, format!("invalid ambient degree `{}`", head.trim())))?;
        let mut coeffs = Vec::with_capacity(ambient + 1);
        for tok in tail.split_whitespace() {
            let c = BigInt::from_str(tok)
                .map_err(|_| ParseError::new(1, format!("invalid coefficient `{tok}`")))?;
            coeffs.push(c);
        }
        if coeffs.len() != ambient + 1 {
            return Err(ParseError::new(
                1,
                format!(
                    "ambient degree {} needs {} coefficients, got {}",
                    ambient,
                    ambient + 1,
                    coeffs.len()
                ),
            ));
        }
        Ok(AmbientPolynomial::new(ambient, coeffs))
    }
}

/// `binom(m, k)` with the convention that it vanishes for `k < 0` or `k > m`.
pub fn binomial(m: usize, k: isize) -> BigInt {
    if k < 0 || k as usize > m {
        return BigInt::zero();
    }
    let k = (k as usize).min(m - k as usize);
    let mut acc = BigInt::one();
    for i in 0..k {
        acc = acc * BigInt::from(m - i) / BigInt::from(i + 1);
    }
    acc
}

/// Coefficient-transfer matrix of the representation `p(x^2) = x^n q(x + x^{-1})`.
///
/// Row `k`, column `j` (both ranging over `0..=floor(n/2)`) holds
/// `binom(n - 2j, k - j)`, the contribution of `c_{2j}` of `q` to `a_k` of
/// `p`. The matrix is lower unitriangular, which is what makes
/// [`AmbientPolynomial::represent`] an integer forward substitution.
pub fn transfer_matrix(n: usize) -> IntMatrix {
    let h = n / 2;
    IntMatrix::from_fn(h + 1, |k, j| binomial(n - 2 * j, k as isize - j as isize))
}

/// Dimensions of `W_n`, `U_n` and `W_{2n} ∩ U_{2n}`, each computed from an
/// explicitly constructed spanning set (not from the closed formula), so the
/// dimension identity is genuinely exercised.
pub fn basis_dims(n: usize) -> (usize, usize, usize) {
    let w: Vec<Vec<BigInt>> = (0..=n).map(|i| sym_vector(n, i)).collect();
    let u: Vec<Vec<BigInt>> = (0..=n).step_by(2).map(|k| unit_vector(n, k)).collect();

    let w2: Vec<Vec<BigInt>> = (0..=2 * n).map(|i| sym_vector(2 * n, i)).collect();
    let u2: Vec<Vec<BigInt>> = (0..=2 * n).step_by(2).map(|k| unit_vector(2 * n, k)).collect();
    let dim_w2 = int_rank(w2.clone());
    let dim_u2 = int_rank(u2.clone());
    let mut joint = w2;
    joint.extend(u2);
    // dim(W ∩ U) = dim W + dim U − dim(W + U)
    let dim_intersection = dim_w2 + dim_u2 - int_rank(joint);

    (int_rank(w), int_rank(u), dim_intersection)
}

fn unit_vector(n: usize, k: usize) -> Vec<BigInt> {
    let mut v = vec![BigInt::zero(); n + 1];
    v[k] = BigInt::one();
    v
}

fn sym_vector(n: usize, i: usize) -> Vec<BigInt> {
    let mut v = vec![BigInt::zero(); n + 1];
    v[i] += BigInt::one();
    v[n - i] += BigInt::one();
    v
}

/// Rank of a set of integer row vectors by fraction-free elimination.
fn int_rank(mut rows: Vec<Vec<BigInt>>) -> usize {
    if rows.is_empty() {
        return 0;
    }
    let cols = rows[0].len();
    let mut rank = 0;
    for col in 0..cols {
        let Some(pivot) = (rank..rows.len()).find(|&r| !rows[r][col].is_zero()) else {
            continue;
        };
        rows.swap(rank, pivot);
        let (head, tail) = rows.split_at_mut(rank + 1);
        let p = &head[rank];
        for row in tail {
            if row[col].is_zero() {
                continue;
            }
            let factor = row[col].clone();
            for c in col..cols {
                row[c] = &row[c] * &p[col] - &factor * &p[c];
            }
        }
        rank += 1;
        if rank == rows.len() {
            break;
        }
    }
    rank
}
