//! Exact integer polynomials in `x₁, …, x_n`, Demazure operators and the
//! Schur-basis expansion that defines the Demazure engine.

use std::collections::{BTreeMap, HashMap};
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::partition::Partition;
use crate::perm::Permutation;

/// Largest rank the Demazure engine accepts; beyond it the polynomials blow up.
pub const DEMAZURE_MAX_N: usize = 6;

/// Exponent vector of a monomial.
pub type Exponents = Vec<u32>;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IntPolynomial {
    n: usize,
    terms: BTreeMap<Exponents, BigInt>,
}

impl IntPolynomial {
    pub fn zero(n: usize) -> Self {
        IntPolynomial { n, terms: BTreeMap::new() }
    }

    pub fn one(n: usize) -> Self {
        IntPolynomial::monomial(vec![0; n], BigInt::one())
    }

    pub fn monomial(exps: Exponents, coeff: impl Into<BigInt>) -> Self {
        let mut p = IntPolynomial::zero(exps.len());
        p.add_term(exps, coeff.into());
        p
    }

    /// `x^α` for a partition (or any exponent vector).
    pub fn x_pow(alpha: &[u32]) -> Self {
        IntPolynomial::monomial(alpha.to_vec(), 1)
    }

    pub fn from_terms<I, C>(n: usize, terms: I) -> Self
    where
        I: IntoIterator<Item = (Exponents, C)>,
        C: Into<BigInt>,
    {
        let mut p = IntPolynomial::zero(n);
        for (e, c) in terms {
            assert_eq!(e.len(), n, "exponent vector length");
            p.add_term(e, c.into());
        }
        p
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Exponents, &BigInt)> {
        self.terms.iter()
    }

    pub fn coeff(&self, exps: &[u32]) -> BigInt {
        self.terms.get(exps).cloned().unwrap_or_default()
    }

    fn add_term(&mut self, exps: Exponents, coeff: BigInt) {
        if coeff.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(exps) {
            Entry::Vacant(v) => {
                v.insert(coeff);
            }
            Entry::Occupied(mut o) => {
                *o.get_mut() += coeff;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub fn scale(&self, c: &BigInt) -> Self {
        if c.is_zero() {
            return IntPolynomial::zero(self.n);
        }
        IntPolynomial { n: self.n, terms: self.terms.iter().map(|(e, v)| (e.clone(), v * c)).collect() }
    }

    /// `s_i f`: exchanges `x_i` and `x_{i+1}` (1-based `i`).
    pub fn swap_vars(&self, i: usize) -> Self {
        let mut out = IntPolynomial::zero(self.n);
        for (e, c) in &self.terms {
            let mut e = e.clone();
            e.swap(i - 1, i);
            out.terms.insert(e, c.clone());
        }
        out
    }

    /// Multiplies by the single variable `x_i` (1-based).
    fn mul_var(&self, i: usize) -> Self {
        let terms = self
            .terms
            .iter()
            .map(|(e, c)| {
                let mut e = e.clone();
                e[i - 1] += 1;
                (e, c.clone())
            })
            .collect();
        IntPolynomial { n: self.n, terms }
    }

    /// Exact quotient by `x_a - x_b` (1-based, `a ≠ b`), by synthetic division
    /// of each binary form in `x_a, x_b`. Fails if the remainder is nonzero.
    pub(crate) fn divide_by_difference(&self, a: usize, b: usize) -> Result<Self> {
        let (ia, ib) = (a - 1, b - 1);
        // Group by the exponents of the other variables and the total degree in x_a, x_b.
        let mut groups: HashMap<Exponents, BTreeMap<u32, BigInt>> = HashMap::new();
        for (e, c) in &self.terms {
            let mut key = e.clone();
            let d = e[ia] + e[ib];
            key[ia] = 0;
            key[ib] = d;
            groups.entry(key).or_default().insert(e[ia], c.clone());
        }
        let mut out = IntPolynomial::zero(self.n);
        for (key, form) in groups {
            let d = key[ib];
            let c = |k: u32| form.get(&k).cloned().unwrap_or_default();
            if d == 0 {
                return Err(Error::InexactDivision(a));
            }
            // Quotient coefficients q_k of x_a^k x_b^{d-1-k}: q_{k-1} = c_k + q_k.
            let mut q = c(d);
            let mut k = d - 1;
            loop {
                if !q.is_zero() {
                    let mut e = key.clone();
                    e[ia] = k;
                    e[ib] = d - 1 - k;
                    out.add_term(e, q.clone());
                }
                if k == 0 {
                    break;
                }
                q += c(k);
                k -= 1;
            }
            // Remainder: the x_b^d coefficient must cancel, -q_0 = c_0.
            if !(q + c(0)).is_zero() {
                return Err(Error::InexactDivision(a));
            }
        }
        Ok(out)
    }

    /// The Demazure operator `π_i f = (x_i f − x_{i+1}·s_i f)/(x_i − x_{i+1})`.
    pub fn demazure(&self, i: usize) -> Result<Self> {
        if i == 0 || i >= self.n {
            return Err(Error::InvalidIndex { index: i, n: self.n });
        }
        let numerator = &self.mul_var(i) - &self.swap_vars(i).mul_var(i + 1);
        if numerator.is_zero() {
            return Ok(numerator);
        }
        numerator.divide_by_difference(i, i + 1)
    }

    /// `π_{i₁} ⋯ π_{i_k} f`, rightmost operator first.
    pub fn demazure_word(&self, word: &[usize]) -> Result<Self> {
        let mut f = self.clone();
        for &i in word.iter().rev() {
            f = f.demazure(i)?;
        }
        Ok(f)
    }

    /// `π_{w₀} f`, iterated along a reduced word of `w₀`.
    pub fn pi_w0(&self) -> Result<Self> {
        self.demazure_word(&Permutation::longest(self.n).reduced_word())
    }

    /// First `i` with `s_i f ≠ f`, if any.
    pub fn asymmetry(&self) -> Option<usize> {
        (1..self.n).find(|&i| self.swap_vars(i) != *self)
    }

    pub fn is_symmetric(&self) -> bool {
        self.asymmetry().is_none()
    }

    /// JSON array of `[exponents, coefficient]` pairs; coefficients outside
    /// the `i64` range are written as decimal strings.
    pub fn to_json(&self) -> Value {
        Value::Array(
            self.terms
                .iter()
                .map(|(e, c)| match c.to_i64() {
                    Some(v) => json!([e, v]),
                    None => json!([e, c.to_string()]),
                })
                .collect(),
        )
    }
}

impl Add for &IntPolynomial {
    type Output = IntPolynomial;
    fn add(self, rhs: &IntPolynomial) -> IntPolynomial {
        assert_eq!(self.n, rhs.n);
        let mut out = self.clone();
        for (e, c) in &rhs.terms {
            out.add_term(e.clone(), c.clone());
        }
        out
    }
}

impl Sub for &IntPolynomial {
    type Output = IntPolynomial;
    fn sub(self, rhs: &IntPolynomial) -> IntPolynomial {
        assert_eq!(self.n, rhs.n);
        let mut out = self.clone();
        for (e, c) in &rhs.terms {
            out.add_term(e.clone(), -c);
        }
        out
    }
}

impl Neg for &IntPolynomial {
    type Output = IntPolynomial;
    fn neg(self) -> IntPolynomial {
        IntPolynomial { n: self.n, terms: self.terms.iter().map(|(e, c)| (e.clone(), -c)).collect() }
    }
}

impl Mul for &IntPolynomial {
    type Output = IntPolynomial;
    fn mul(self, rhs: &IntPolynomial) -> IntPolynomial {
        assert_eq!(self.n, rhs.n);
        let mut out = IntPolynomial::zero(self.n);
        for (e1, c1) in &self.terms {
            for (e2, c2) in &rhs.terms {
                let e: Exponents = e1.iter().zip(e2).map(|(a, b)| a + b).collect();
                out.add_term(e, c1 * c2);
            }
        }
        out
    }
}

/// The Demazure character (key polynomial) `κ_{w,μ} = π_w(x^μ)`.
pub fn demazure_char(w: &Permutation, mu: &Partition) -> Result<IntPolynomial> {
    if w.n() != mu.n() {
        return Err(Error::SizeMismatch { expected: w.n(), actual: mu.n() });
    }
    IntPolynomial::x_pow(mu.parts()).demazure_word(&w.reduced_word())
}

/// `s_ν = π_{w₀}(x^ν)`.
pub fn schur_poly(nu: &Partition) -> IntPolynomial {
    IntPolynomial::x_pow(nu.parts()).pi_w0().expect("π_w0 of a monomial is exact")
}

/// Coefficients of a symmetric polynomial in the Schur basis.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct SchurExpansion {
    pub coefficients: BTreeMap<Partition, BigInt>,
}

impl SchurExpansion {
    pub fn coeff(&self, nu: &Partition) -> BigInt {
        self.coefficients.get(nu).cloned().unwrap_or_default()
    }

    /// `Σ c_ν s_ν`.
    pub fn reconstruct(&self, n: usize) -> IntPolynomial {
        let mut out = IntPolynomial::zero(n);
        for (nu, c) in &self.coefficients {
            out = &out + &schur_poly(nu).scale(c);
        }
        out
    }
}

/// Expands a symmetric polynomial by repeatedly subtracting `c·s_ν` for its
/// lexicographically largest monomial `c·x^ν` (which is always dominant).
pub fn schur_expand(f: &IntPolynomial) -> Result<SchurExpansion> {
    if let Some(i) = f.asymmetry() {
        return Err(Error::NotSymmetric(i));
    }
    let mut rest = f.clone();
    let mut out = SchurExpansion::default();
    while let Some((lead, c)) = rest.terms.last_key_value() {
        let nu = Partition::new(lead.clone()).expect("leading exponent of a symmetric polynomial is dominant");
        let c = c.clone();
        rest = &rest - &schur_poly(&nu).scale(&c);
        out.coefficients.insert(nu, c);
    }
    Ok(out)
}

/// `π_{w₀}(x^λ · κ_{w,μ})` expanded in Schur polynomials: every `c_{λμ}^ν(w)` at once.
pub fn refined_lr_demazure_all(lambda: &Partition, mu: &Partition, w: &Permutation) -> Result<SchurExpansion> {
    let n = w.n();
    if n > DEMAZURE_MAX_N {
        return Err(Error::EngineLimit { engine: "demazure", n, limit: DEMAZURE_MAX_N });
    }
    for p in [lambda, mu] {
        if p.n() != n {
            return Err(Error::SizeMismatch { expected: n, actual: p.n() });
        }
    }
    let product = &IntPolynomial::x_pow(lambda.parts()) * &demazure_char(w, mu)?;
    schur_expand(&product.pi_w0()?)
}

/// The coefficient of `s_ν` in `π_{w₀}(x^λ · κ_{w,μ})`.
pub fn refined_lr_demazure(lambda: &Partition, mu: &Partition, nu: &Partition, w: &Permutation) -> Result<u64> {
    if nu.n() != w.n() {
        return Err(Error::SizeMismatch { expected: w.n(), actual: nu.n() });
    }
    let all = refined_lr_demazure_all(lambda, mu, w)?;
    if lambda.size() + mu.size() != nu.size() {
        return Ok(0);
    }
    to_count(&all.coeff(nu))
}

pub(crate) fn to_count(c: &BigInt) -> Result<u64> {
    if c.is_negative() {
        return Err(Error::CoefficientRange(c.to_string()));
    }
    c.to_u64().ok_or_else(|| Error::CoefficientRange(c.to_string()))
}
