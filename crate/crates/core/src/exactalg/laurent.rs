//! Multivariate Laurent polynomials over ℤ with a canonical term order,
//! and univariate integer polynomials.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

/// A Laurent polynomial in `nvars` variables `x1..x<nvars>` with integer
/// coefficients. Terms are kept in a map from exponent vector to nonzero
/// coefficient; the map order (lexicographic on the exponent vector) is the
/// canonical term order used for rendering, equality and hashing.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct LaurentPoly {
    nvars: usize,
    terms: BTreeMap<Vec<i32>, BigInt>,
}

impl LaurentPoly {
    pub const MAX_VARS: usize = 16;

    pub fn zero(nvars: usize) -> Self {
        assert!(nvars <= Self::MAX_VARS, "too many variables");
        LaurentPoly {
            nvars,
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(nvars: usize, c: impl Into<BigInt>) -> Self {
        let mut p = Self::zero(nvars);
        let c = c.into();
        if !c.is_zero() {
            p.terms.insert(vec![0; nvars], c);
        }
        p
    }

    pub fn one(nvars: usize) -> Self {
        Self::constant(nvars, 1)
    }

    /// The variable `x<i>` (1-based).
    pub fn var(nvars: usize, i: usize) -> Self {
        Self::monomial(nvars, &unit_exp(nvars, i), 1)
    }

    /// `c · x^exp` for an exponent vector.
    pub fn monomial(nvars: usize, exp: &[i32], c: impl Into<BigInt>) -> Self {
        assert_eq!(exp.len(), nvars);
        let mut p = Self::zero(nvars);
        let c = c.into();
        if !c.is_zero() {
            p.terms.insert(exp.to_vec(), c);
        }
        p
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1
            && self
                .terms
                .get(vec![0; self.nvars].as_slice())
                .is_some_and(|c| c.is_one())
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Vec<i32>, &BigInt)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    fn insert_term(&mut self, exp: Vec<i32>, c: BigInt) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(exp) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                let s = e.get() + c;
                if s.is_zero() {
                    e.remove();
                } else {
                    *e.get_mut() = s;
                }
            }
        }
    }

    pub fn add(&self, other: &LaurentPoly) -> LaurentPoly {
        assert_eq!(self.nvars, other.nvars, "variable count mismatch");
        let mut out = self.clone();
        for (e, c) in &other.terms {
            out.insert_term(e.clone(), c.clone());
        }
        out
    }

    pub fn neg(&self) -> LaurentPoly {
        LaurentPoly {
            nvars: self.nvars,
            terms: self.terms.iter().map(|(e, c)| (e.clone(), -c)).collect(),
        }
    }

    pub fn sub(&self, other: &LaurentPoly) -> LaurentPoly {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &LaurentPoly) -> LaurentPoly {
        assert_eq!(self.nvars, other.nvars, "variable count mismatch");
        let mut out = LaurentPoly::zero(self.nvars);
        for (e1, c1) in &self.terms {
            for (e2, c2) in &other.terms {
                let e: Vec<i32> = e1.iter().zip(e2).map(|(a, b)| a + b).collect();
                out.insert_term(e, c1 * c2);
            }
        }
        out
    }

    pub fn scale(&self, c: &BigInt) -> LaurentPoly {
        if c.is_zero() {
            return LaurentPoly::zero(self.nvars);
        }
        LaurentPoly {
            nvars: self.nvars,
            terms: self.terms.iter().map(|(e, k)| (e.clone(), k * c)).collect(),
        }
    }

    pub fn pow(&self, n: u32) -> LaurentPoly {
        let mut acc = LaurentPoly::one(self.nvars);
        for _ in 0..n {
            acc = acc.mul(self);
        }
        acc
    }

    /// Multiply by the monomial `x^exp`.
    pub fn shift(&self, exp: &[i32]) -> LaurentPoly {
        assert_eq!(exp.len(), self.nvars);
        LaurentPoly {
            nvars: self.nvars,
            terms: self
                .terms
                .iter()
                .map(|(e, c)| (e.iter().zip(exp).map(|(a, b)| a + b).collect(), c.clone()))
                .collect(),
        }
    }

    /// Substitute the integer constant `value` for variable `i` (1-based).
    /// The variable count is unchanged (the variable just no longer occurs).
    pub fn specialize(&self, i: usize, value: &BigInt) -> Result<LaurentPoly> {
        assert!(i >= 1 && i <= self.nvars, "variable index out of range");
        let mut out = LaurentPoly::zero(self.nvars);
        for (e, c) in &self.terms {
            let k = e[i - 1];
            let coeff = if k >= 0 {
                c * value.pow(k as u32)
            } else {
                if value.is_zero() {
                    return Err(Error::InexactDivision(
                        "specializing a negative power at 0".into(),
                    ));
                }
                let d = value.pow((-k) as u32);
                let (q, r) = num_integer::Integer::div_rem(c, &d);
                if !r.is_zero() {
                    return Err(Error::InexactDivision(format!(
                        "x{i} = {value} does not divide coefficient {c}"
                    )));
                }
                q
            };
            let mut e2 = e.clone();
            e2[i - 1] = 0;
            out.insert_term(e2, coeff);
        }
        Ok(out)
    }

    /// Evaluate at positive rationals (all variables).
    pub fn eval(&self, values: &[BigRational]) -> BigRational {
        assert_eq!(values.len(), self.nvars);
        let mut acc = BigRational::zero();
        for (e, c) in &self.terms {
            let mut t = BigRational::from_integer(c.clone());
            for (k, v) in e.iter().zip(values) {
                match k.cmp(&0) {
                    std::cmp::Ordering::Equal => {}
                    std::cmp::Ordering::Greater => {
                        t *= pow_rat(v, *k as u32);
                    }
                    std::cmp::Ordering::Less => {
                        t *= pow_rat(v, (-*k) as u32).recip();
                    }
                }
            }
            acc += t;
        }
        acc
    }

    /// Exact division; errors if `self` is not a multiple of `d`.
    pub fn div_exact(&self, d: &LaurentPoly) -> Result<LaurentPoly> {
        assert_eq!(self.nvars, d.nvars, "variable count mismatch");
        if d.is_zero() {
            return Err(Error::InexactDivision("division by zero".into()));
        }
        let mut rem = self.clone();
        let mut quo = LaurentPoly::zero(self.nvars);
        // Lex-leading term of the divisor (largest exponent vector).
        let (dexp, dc) = d.terms.iter().next_back().unwrap();
        while !rem.is_zero() {
            let (rexp, rc) = {
                let (e, c) = rem.terms.iter().next_back().unwrap();
                (e.clone(), c.clone())
            };
            let (q, r) = num_integer::Integer::div_rem(&rc, dc);
            if !r.is_zero() {
                return Err(Error::InexactDivision(format!(
                    "leading coefficient {rc} not divisible by {dc}"
                )));
            }
            let e: Vec<i32> = rexp.iter().zip(dexp).map(|(a, b)| a - b).collect();
            let t = LaurentPoly::monomial(self.nvars, &e, q);
            rem = rem.sub(&t.mul(d));
            quo = quo.add(&t);
            // Progress: the leading term of `rem` strictly decreases in lex
            // order, or the loop errors out above. Guard against a stall.
            if let Some((nexp, _)) = rem.terms.iter().next_back() {
                if *nexp >= rexp {
                    return Err(Error::InexactDivision(
                        "no lex progress; quotient is not a Laurent polynomial".into(),
                    ));
                }
            }
        }
        Ok(quo)
    }

    /// Canonical text form, e.g. `x1^-1*x2 + 1`. Terms in lexicographic
    /// order of exponent vectors (ascending).
    pub fn render(&self) -> String {
        if self.terms.is_empty() {
            return "0".to_string();
        }
        let mut out = String::new();
        for (idx, (e, c)) in self.terms.iter().enumerate() {
            let neg = c.is_negative();
            let mag = c.abs();
            if idx == 0 {
                if neg {
                    out.push('-');
                }
            } else {
                out.push_str(if neg { " - " } else { " + " });
            }
            let mut factors: Vec<String> = Vec::new();
            if !mag.is_one() || e.iter().all(|&k| k == 0) {
                factors.push(mag.to_string());
            }
            for (i, &k) in e.iter().enumerate() {
                if k == 0 {
                    continue;
                }
                if k == 1 {
                    factors.push(format!("x{}", i + 1));
                } else {
                    factors.push(format!("x{}^{}", i + 1, k));
                }
            }
            out.push_str(&factors.join("*"));
        }
        out
    }

    /// Parse the grammar produced by [`render`].
    pub fn parse(nvars: usize, s: &str) -> Result<LaurentPoly> {
        let mut p = Parser {
            s: s.as_bytes(),
            pos: 0,
        };
        let poly = p.sum(nvars)?;
        p.skip_ws();
        if p.pos != p.s.len() {
            return Err(Error::Parse(format!(
                "trailing input at byte {}: {:?}",
                p.pos,
                &s[p.pos..]
            )));
        }
        Ok(poly)
    }
}

fn pow_rat(v: &BigRational, k: u32) -> BigRational {
    let mut acc = BigRational::one();
    for _ in 0..k {
        acc *= v;
    }
    acc
}

pub fn unit_exp(nvars: usize, i: usize) -> Vec<i32> {
    assert!(i >= 1 && i <= nvars);
    let mut e = vec![0; nvars];
    e[i - 1] = 1;
    e
}

struct Parser<'a> {
    s: &'a [u8],
    pos: usize,
}

impl<'a> Parser<'a> {
    fn skip_ws(&mut self) {
        while self.pos < self.s.len() && self.s[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.s.get(self.pos).copied()
    }

    fn int(&mut self) -> Result<BigInt> {
        self.skip_ws();
        let start = self.pos;
        if self.peek() == Some(b'-') {
            self.pos += 1;
        }
        let ds = self.pos;
        while self.pos < self.s.len() && self.s[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if self.pos == ds {
            return Err(Error::Parse(format!("expected integer at byte {start}")));
        }
        std::str::from_utf8(&self.s[start..self.pos])
            .unwrap()
            .parse::<BigInt>()
            .map_err(|e| Error::Parse(e.to_string()))
    }

    fn factor(&mut self, nvars: usize) -> Result<LaurentPoly> {
        match self.peek() {
            Some(b'x') => {
                self.pos += 1;
                let ds = self.pos;
                while self.pos < self.s.len() && self.s[self.pos].is_ascii_digit() {
                    self.pos += 1;
                }
                if self.pos == ds {
                    return Err(Error::Parse("expected variable index after 'x'".into()));
                }
                let i: usize = std::str::from_utf8(&self.s[ds..self.pos])
                    .unwrap()
                    .parse()
                    .map_err(|_| Error::Parse("bad variable index".into()))?;
                if i == 0 || i > nvars {
                    return Err(Error::Parse(format!("variable x{i} out of range")));
                }
                let mut k: i32 = 1;
                if self.peek() == Some(b'^') {
                    self.pos += 1;
                    let e = self.int()?;
                    k = i32::try_from(&e).map_err(|_| Error::Parse("exponent overflow".into()))?;
                }
                let mut exp = vec![0; nvars];
                exp[i - 1] = k;
                Ok(LaurentPoly::monomial(nvars, &exp, 1))
            }
            Some(c) if c.is_ascii_digit() => {
                let n = self.int()?;
                Ok(LaurentPoly::constant(nvars, n))
            }
            other => Err(Error::Parse(format!("unexpected token {other:?}"))),
        }
    }

    fn term(&mut self, nvars: usize) -> Result<LaurentPoly> {
        let mut acc = self.factor(nvars)?;
        while self.peek() == Some(b'*') {
            self.pos += 1;
            acc = acc.mul(&self.factor(nvars)?);
        }
        Ok(acc)
    }

    fn sum(&mut self, nvars: usize) -> Result<LaurentPoly> {
        let mut sign = 1i64;
        if self.peek() == Some(b'-') {
            self.pos += 1;
            sign = -1;
        } else if self.peek() == Some(b'+') {
            self.pos += 1;
        }
        let mut acc = self.term(nvars)?.scale(&BigInt::from(sign));
        loop {
            match self.peek() {
                Some(b'+') => {
                    self.pos += 1;
                    let t = self.term(nvars)?;
                    acc = acc.add(&t);
                }
                Some(b'-') => {
                    self.pos += 1;
                    let t = self.term(nvars)?;
                    acc = acc.sub(&t);
                }
                _ => break,
            }
        }
        Ok(acc)
    }
}

/// A univariate polynomial with rational coefficients, used for exact
/// interpolation of point counts (the final values of interest are integers).
#[derive(Clone, Debug, PartialEq)]
pub struct IntPolynomial {
    /// Coefficients, low degree first; no trailing zeros.
    pub coeffs: Vec<BigRational>,
}

impl IntPolynomial {
    pub fn zero() -> Self {
        IntPolynomial { coeffs: vec![] }
    }

    pub fn degree(&self) -> Option<usize> {
        if self.coeffs.is_empty() {
            None
        } else {
            Some(self.coeffs.len() - 1)
        }
    }

    fn trim(mut self) -> Self {
        while self.coeffs.last().is_some_and(|c| c.is_zero()) {
            self.coeffs.pop();
        }
        self
    }

    pub fn eval(&self, x: &BigRational) -> BigRational {
        let mut acc = BigRational::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }

    /// Lagrange interpolation through the given (x, y) points.
    pub fn interpolate(points: &[(BigRational, BigRational)]) -> Self {
        let mut acc = IntPolynomial::zero();
        for (i, (xi, yi)) in points.iter().enumerate() {
            // Basis polynomial ∏_{j≠i} (x - x_j)/(x_i - x_j), scaled by y_i.
            let mut basis = IntPolynomial {
                coeffs: vec![yi.clone()],
            };
            for (j, (xj, _)) in points.iter().enumerate() {
                if i == j {
                    continue;
                }
                let denom = xi - xj;
                assert!(!denom.is_zero(), "repeated interpolation node");
                // multiply by (x - x_j) / denom
                let mut next = vec![BigRational::zero(); basis.coeffs.len() + 1];
                for (d, c) in basis.coeffs.iter().enumerate() {
                    let scaled = c / &denom;
                    next[d + 1] += &scaled;
                    next[d] -= scaled * xj;
                }
                basis.coeffs = next;
            }
            let n = acc.coeffs.len().max(basis.coeffs.len());
            acc.coeffs.resize(n, BigRational::zero());
            for (d, c) in basis.coeffs.iter().enumerate() {
                acc.coeffs[d] += c;
            }
        }
        acc.trim()
    }
}
