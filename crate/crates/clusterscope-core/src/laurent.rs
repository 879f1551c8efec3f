//! Exact multivariate Laurent polynomials over arbitrary-precision
//! integers, plus the lazily-reduced rational functions built from them.
//!
//! Terms are kept in graded-lexicographic order (total degree first, ties
//! by exponent vector); printing lists the leading term first. Coefficients
//! are `BigInt`, exponents are machine words.

use alloc::collections::BTreeMap;
use alloc::string::{String, ToString};
use alloc::vec;
use alloc::vec::Vec;
use core::cmp::Ordering;
use core::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

/// Errors for Laurent arithmetic and parsing.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum LaurentError {
    /// Operands disagree on the number of variables.
    NvarsMismatch { left: usize, right: usize },
    /// Division by the zero polynomial.
    ZeroDivisor,
    /// `exact_div` found no exact quotient.
    NotDivisible,
    /// Evaluation hit a zero value raised to a negative exponent.
    ZeroToNegativePower { var: usize },
    /// Text form could not be parsed.
    Parse(String),
}

impl fmt::Display for LaurentError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            LaurentError::NvarsMismatch { left, right } => {
                write!(f, "variable counts differ: {left} vs {right}")
            }
            LaurentError::ZeroDivisor => write!(f, "division by zero polynomial"),
            LaurentError::NotDivisible => write!(f, "not exactly divisible"),
            LaurentError::ZeroToNegativePower { var } => {
                write!(f, "variable x{} is zero but appears inverted", var + 1)
            }
            LaurentError::Parse(msg) => write!(f, "parse error: {msg}"),
        }
    }
}

impl core::error::Error for LaurentError {}

/// Exponent vector with graded-lexicographic ordering.
#[derive(Debug, Clone, PartialEq, Eq)]
struct Mono(Vec<i64>);

impl Mono {
    fn degree(&self) -> i128 {
        self.0.iter().map(|&e| e as i128).sum()
    }
}

impl Ord for Mono {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree()
            .cmp(&other.degree())
            .then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for Mono {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// A Laurent polynomial in `nvars` variables `x1..x{nvars}`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LaurentPoly {
    nvars: usize,
    terms: BTreeMap<Mono, BigInt>,
}

impl LaurentPoly {
    pub fn zero(nvars: usize) -> Self {
        LaurentPoly { nvars, terms: BTreeMap::new() }
    }

    pub fn one(nvars: usize) -> Self {
        Self::constant(nvars, BigInt::one())
    }

    pub fn constant(nvars: usize, c: impl Into<BigInt>) -> Self {
        let mut p = Self::zero(nvars);
        let c = c.into();
        if !c.is_zero() {
            p.terms.insert(Mono(vec![0; nvars]), c);
        }
        p
    }

    /// The variable `x{i+1}` (0-based index).
    pub fn var(nvars: usize, i: usize) -> Self {
        assert!(i < nvars, "variable index out of range");
        let mut exps = vec![0i64; nvars];
        exps[i] = 1;
        Self::monomial(nvars, &exps, BigInt::one())
    }

    pub fn monomial(nvars: usize, exps: &[i64], coeff: impl Into<BigInt>) -> Self {
        assert_eq!(exps.len(), nvars, "exponent vector length mismatch");
        let mut p = Self::zero(nvars);
        let c = coeff.into();
        if !c.is_zero() {
            p.terms.insert(Mono(exps.to_vec()), c);
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
                .iter()
                .all(|(m, c)| m.0.iter().all(|&e| e == 0) && c.is_one())
    }

    pub fn term_count(&self) -> usize {
        self.terms.len()
    }

    /// Terms in ascending graded-lexicographic order.
    pub fn terms(&self) -> impl Iterator<Item = (&[i64], &BigInt)> {
        self.terms.iter().map(|(m, c)| (m.0.as_slice(), c))
    }

    fn insert_term(terms: &mut BTreeMap<Mono, BigInt>, m: Mono, c: BigInt) {
        if c.is_zero() {
            return;
        }
        match terms.entry(m) {
            alloc::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c);
            }
            alloc::collections::btree_map::Entry::Occupied(mut e) => {
                *e.get_mut() += c;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    fn check_nvars(&self, other: &Self) -> Result<(), LaurentError> {
        if self.nvars != other.nvars {
            Err(LaurentError::NvarsMismatch { left: self.nvars, right: other.nvars })
        } else {
            Ok(())
        }
    }

    pub fn add(&self, other: &Self) -> Result<Self, LaurentError> {
        self.check_nvars(other)?;
        let mut terms = self.terms.clone();
        for (m, c) in &other.terms {
            Self::insert_term(&mut terms, m.clone(), c.clone());
        }
        Ok(LaurentPoly { nvars: self.nvars, terms })
    }

    pub fn sub(&self, other: &Self) -> Result<Self, LaurentError> {
        self.check_nvars(other)?;
        let mut terms = self.terms.clone();
        for (m, c) in &other.terms {
            Self::insert_term(&mut terms, m.clone(), -c.clone());
        }
        Ok(LaurentPoly { nvars: self.nvars, terms })
    }

    pub fn neg(&self) -> Self {
        LaurentPoly {
            nvars: self.nvars,
            terms: self.terms.iter().map(|(m, c)| (m.clone(), -c.clone())).collect(),
        }
    }

    /// Exact product.
    pub fn multiply(&self, other: &Self) -> Result<Self, LaurentError> {
        self.check_nvars(other)?;
        let mut terms = BTreeMap::new();
        for (ma, ca) in &self.terms {
            for (mb, cb) in &other.terms {
                let exps: Vec<i64> =
                    ma.0.iter().zip(&mb.0).map(|(&a, &b)| a + b).collect();
                Self::insert_term(&mut terms, Mono(exps), ca * cb);
            }
        }
        Ok(LaurentPoly { nvars: self.nvars, terms })
    }

    /// Nonnegative integer power by repeated multiplication.
    pub fn pow(&self, e: u32) -> Self {
        let mut acc = Self::one(self.nvars);
        for _ in 0..e {
            acc = acc.multiply(self).expect("same nvars");
        }
        acc
    }

    /// Componentwise minimum exponent over all terms, per variable.
    fn min_exponents(&self) -> Vec<i64> {
        let mut mins = vec![i64::MAX; self.nvars];
        for m in self.terms.keys() {
            for (slot, &e) in mins.iter_mut().zip(&m.0) {
                *slot = (*slot).min(e);
            }
        }
        mins
    }

    fn shifted(&self, shift: &[i64]) -> Self {
        let terms = self
            .terms
            .iter()
            .map(|(m, c)| {
                let exps: Vec<i64> =
                    m.0.iter().zip(shift).map(|(&e, &s)| e + s).collect();
                (Mono(exps), c.clone())
            })
            .collect();
        LaurentPoly { nvars: self.nvars, terms }
    }

    /// Exact division: returns `r` with `r * q == p`, or `NotDivisible`.
    ///
    /// Both operands are first shifted by their componentwise minimum
    /// exponents — exact because minimum exponents are additive over
    /// products in an integral domain — after which ordinary multivariate
    /// polynomial division runs on true polynomials, cancelling leading
    /// terms in lexicographic order.
    pub fn exact_div(&self, q: &Self) -> Result<Self, LaurentError> {
        self.check_nvars(q)?;
        if q.is_zero() {
            return Err(LaurentError::ZeroDivisor);
        }
        if self.is_zero() {
            return Ok(Self::zero(self.nvars));
        }
        let pmin = self.min_exponents();
        let qmin = q.min_exponents();
        let pshift: Vec<i64> = pmin.iter().map(|&e| -e).collect();
        let qshift: Vec<i64> = qmin.iter().map(|&e| -e).collect();
        let p0 = self.shifted(&pshift);
        let q0 = q.shifted(&qshift);
        let quotient = Self::poly_div(&p0, &q0)?;
        let rshift: Vec<i64> = pmin.iter().zip(&qmin).map(|(&a, &b)| a - b).collect();
        Ok(quotient.shifted(&rshift))
    }

    /// Division of true polynomials (all exponents nonnegative): greedy
    /// leading-term cancellation in lexicographic order, failing fast when
    /// a leading monomial or coefficient does not divide.
    fn poly_div(p: &Self, q: &Self) -> Result<Self, LaurentError> {
        fn lex_max(poly: &LaurentPoly) -> (&Mono, &BigInt) {
            poly.terms
                .iter()
                .max_by(|(a, _), (b, _)| a.0.cmp(&b.0))
                .expect("nonzero polynomial")
        }
        let nvars = p.nvars;
        let (qm, qc) = {
            let (m, c) = lex_max(q);
            (m.clone(), c.clone())
        };
        let mut rem = p.clone();
        let mut quot = BTreeMap::new();
        while !rem.is_zero() {
            let (rm, rc) = {
                let (m, c) = lex_max(&rem);
                (m.clone(), c.clone())
            };
            if rm.0.iter().zip(&qm.0).any(|(&a, &b)| a < b) {
                return Err(LaurentError::NotDivisible);
            }
            if (&rc % &qc) != BigInt::zero() {
                return Err(LaurentError::NotDivisible);
            }
            let texps: Vec<i64> = rm.0.iter().zip(&qm.0).map(|(&a, &b)| a - b).collect();
            let tc = &rc / &qc;
            let t = LaurentPoly::monomial(nvars, &texps, tc.clone());
            rem = rem.sub(&t.multiply(q)?)?;
            Self::insert_term(&mut quot, Mono(texps), tc);
        }
        Ok(LaurentPoly { nvars, terms: quot })
    }

    /// Evaluates at a rational point. Zero values under negative exponents
    /// are reported, never silently mangled.
    pub fn eval_rational(&self, vals: &[BigRational]) -> Result<BigRational, LaurentError> {
        if vals.len() != self.nvars {
            return Err(LaurentError::NvarsMismatch { left: self.nvars, right: vals.len() });
        }
        let mut total = BigRational::zero();
        for (m, c) in &self.terms {
            let mut term = BigRational::from_integer(c.clone());
            for (i, &e) in m.0.iter().enumerate() {
                if e == 0 {
                    continue;
                }
                if vals[i].is_zero() {
                    if e < 0 {
                        return Err(LaurentError::ZeroToNegativePower { var: i });
                    }
                    term = BigRational::zero();
                    break;
                }
                let mag = vals[i].pow(e.unsigned_abs().try_into().unwrap_or(i32::MAX));
                if e > 0 {
                    term *= mag;
                } else {
                    term *= mag.recip();
                }
            }
            total += term;
        }
        Ok(total)
    }

    /// Parses the text form produced by `Display`, with a fixed variable
    /// count. Accepts optional `c *` coefficients, `xK^E` powers with `^1`
    /// omitted, and `+`/`-` separators.
    pub fn parse(input: &str, nvars: usize) -> Result<Self, LaurentError> {
        let mut result = Self::zero(nvars);
        let s = input.trim();
        if s.is_empty() {
            return Err(LaurentError::Parse("empty input".into()));
        }
        // Split into signed terms at top level.
        let mut chunks: Vec<(i8, String)> = Vec::new();
        let mut sign: i8 = 1;
        let mut cur = String::new();
        let chars: Vec<char> = s.chars().collect();
        let mut i = 0usize;
        while i < chars.len() {
            let c = chars[i];
            // A sign splits terms only when surrounded by spaces; signs
            // attached to a coefficient stay inside the term.
            if (c == '+' || c == '-')
                && i > 0
                && chars[i - 1] == ' '
                && i + 1 < chars.len()
                && chars[i + 1] == ' '
            {
                if cur.trim().is_empty() {
                    return Err(LaurentError::Parse("empty term".into()));
                }
                chunks.push((sign, core::mem::take(&mut cur)));
                sign = if c == '+' { 1 } else { -1 };
                i += 2;
                continue;
            }
            cur.push(c);
            i += 1;
        }
        if cur.trim().is_empty() {
            return Err(LaurentError::Parse("empty term".into()));
        }
        chunks.push((sign, cur));

        for (sgn, chunk) in chunks {
            let term = Self::parse_term(chunk.trim(), nvars)?;
            let term = if sgn < 0 { term.neg() } else { term };
            result = result.add(&term)?;
        }
        Ok(result)
    }

    fn parse_term(chunk: &str, nvars: usize) -> Result<Self, LaurentError> {
        if chunk.is_empty() {
            return Err(LaurentError::Parse("empty term".into()));
        }
        let mut coeff = BigInt::one();
        let mut exps = vec![0i64; nvars];
        let mut saw_factor = false;
        for raw in chunk.split_whitespace() {
            let mut piece = raw.trim();
            if piece == "*" {
                continue;
            }
            // A sign glued onto a variable, as in the leading term `-x1`.
            if let Some(rest) = piece.strip_prefix('-') {
                if rest.starts_with('x') {
                    coeff = -coeff;
                    piece = rest;
                }
            }
            if let Some(rest) = piece.strip_prefix('x') {
                let (idx_str, exp_str) = match rest.split_once('^') {
                    Some((a, b)) => (a, Some(b)),
                    None => (rest, None),
                };
                let idx: usize = idx_str
                    .parse()
                    .map_err(|_| LaurentError::Parse(format_parse(piece)))?;
                if idx == 0 || idx > nvars {
                    return Err(LaurentError::Parse(format_var_range(idx, nvars)));
                }
                let e: i64 = match exp_str {
                    Some(t) => t.parse().map_err(|_| LaurentError::Parse(format_parse(piece)))?,
                    None => 1,
                };
                exps[idx - 1] += e;
                saw_factor = true;
            } else {
                let c: BigInt = piece
                    .parse()
                    .map_err(|_| LaurentError::Parse(format_parse(piece)))?;
                coeff *= c;
                saw_factor = true;
            }
        }
        if !saw_factor {
            return Err(LaurentError::Parse("empty term".into()));
        }
        Ok(Self::monomial(nvars, &exps, coeff))
    }
}

fn format_parse(piece: &str) -> String {
    let mut s = String::from("bad token `");
    s.push_str(piece);
    s.push('`');
    s
}

fn format_var_range(idx: usize, nvars: usize) -> String {
    let mut s = String::from("variable index ");
    s.push_str(&idx.to_string());
    s.push_str(" outside 1..=");
    s.push_str(&nvars.to_string());
    s
}

impl PartialOrd for LaurentPoly {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for LaurentPoly {
    fn cmp(&self, other: &Self) -> Ordering {
        self.nvars
            .cmp(&other.nvars)
            .then_with(|| self.terms.iter().cmp(other.terms.iter()))
    }
}

impl fmt::Display for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        // Leading (largest) term first.
        for (pos, (m, c)) in self.terms.iter().rev().enumerate() {
            let neg = c.is_negative();
            let mag = c.abs();
            if pos == 0 {
                if neg {
                    write!(f, "-")?;
                }
            } else if neg {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            let trivial_mono = m.0.iter().all(|&e| e == 0);
            if trivial_mono {
                write!(f, "{mag}")?;
                continue;
            }
            let mut lead = true;
            if !mag.is_one() {
                write!(f, "{mag} *")?;
                lead = false;
            }
            for (i, &e) in m.0.iter().enumerate() {
                if e == 0 {
                    continue;
                }
                if !lead {
                    write!(f, " ")?;
                }
                lead = false;
                if e == 1 {
                    write!(f, "x{}", i + 1)?;
                } else {
                    write!(f, "x{}^{}", i + 1, e)?;
                }
            }
        }
        Ok(())
    }
}

/// A ratio of Laurent polynomials, reduced only lazily; equality is by
/// cross-multiplication.
#[derive(Debug, Clone)]
pub struct RationalFn {
    numerator: LaurentPoly,
    denominator: LaurentPoly,
}

impl RationalFn {
    pub fn new(numerator: LaurentPoly, denominator: LaurentPoly) -> Result<Self, LaurentError> {
        numerator.check_nvars(&denominator)?;
        if denominator.is_zero() {
            return Err(LaurentError::ZeroDivisor);
        }
        Ok(RationalFn { numerator, denominator })
    }

    pub fn from_poly(p: LaurentPoly) -> Self {
        let one = LaurentPoly::one(p.nvars());
        RationalFn { numerator: p, denominator: one }
    }

    pub fn numerator(&self) -> &LaurentPoly {
        &self.numerator
    }

    pub fn denominator(&self) -> &LaurentPoly {
        &self.denominator
    }
}

impl PartialEq for RationalFn {
    fn eq(&self, other: &Self) -> bool {
        match (
            self.numerator.multiply(&other.denominator),
            other.numerator.multiply(&self.denominator),
        ) {
            (Ok(a), Ok(b)) => a == b,
            _ => false,
        }
    }
}

impl Eq for RationalFn {}

impl fmt::Display for RationalFn {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}) / ({})", self.numerator, self.denominator)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::format;

    fn xy() -> (LaurentPoly, LaurentPoly) {
        (LaurentPoly::var(2, 0), LaurentPoly::var(2, 1))
    }

    #[test]
    fn multiply_difference_of_squares() {
        let (x, y) = xy();
        let sum = x.add(&y).unwrap();
        let diff = x.sub(&y).unwrap();
        let prod = sum.multiply(&diff).unwrap();
        let expect = x.pow(2).sub(&y.pow(2)).unwrap();
        assert_eq!(prod, expect);
        assert_eq!(format!("{prod}"), "x1^2 - x2^2");
    }

    #[test]
    fn multiply_identity_and_inverse() {
        let (x, _) = xy();
        let one = LaurentPoly::one(2);
        let p = x.add(&LaurentPoly::constant(2, 7)).unwrap();
        assert_eq!(p.multiply(&one).unwrap(), p);
        let xinv = LaurentPoly::monomial(2, &[-1, 0], 1);
        assert!(x.multiply(&xinv).unwrap().is_one());
    }

    #[test]
    fn multiply_rejects_nvars_mismatch() {
        let p = LaurentPoly::one(2);
        let q = LaurentPoly::one(3);
        assert_eq!(
            p.multiply(&q).unwrap_err(),
            LaurentError::NvarsMismatch { left: 2, right: 3 }
        );
    }

    #[test]
    fn exact_div_monomial_factoring() {
        let (x, y) = xy();
        // (x^2 y + x y^2) / (x y) = x + y
        let num = LaurentPoly::monomial(2, &[2, 1], 1)
            .add(&LaurentPoly::monomial(2, &[1, 2], 1))
            .unwrap();
        let den = LaurentPoly::monomial(2, &[1, 1], 1);
        assert_eq!(num.exact_div(&den).unwrap(), x.add(&y).unwrap());
    }

    #[test]
    fn exact_div_laurent_shift() {
        let x = LaurentPoly::var(1, 0);
        let num = LaurentPoly::one(1).add(&x).unwrap();
        let q = num.exact_div(&x).unwrap();
        let expect = LaurentPoly::monomial(1, &[-1], 1)
            .add(&LaurentPoly::one(1))
            .unwrap();
        assert_eq!(q, expect);
        assert_eq!(format!("{q}"), "1 + x1^-1");
    }

    #[test]
    fn exact_div_detects_nondivisible() {
        let (x, y) = xy();
        let p = LaurentPoly::one(2).add(&x).unwrap();
        let q = LaurentPoly::one(2).add(&y).unwrap();
        assert_eq!(p.exact_div(&q).unwrap_err(), LaurentError::NotDivisible);
        // Coefficient failure, too.
        let two_x = LaurentPoly::monomial(2, &[1, 0], 2);
        let three = LaurentPoly::constant(2, 3);
        assert_eq!(two_x.exact_div(&three).unwrap_err(), LaurentError::NotDivisible);
    }

    #[test]
    fn exact_div_zero_cases() {
        let x = LaurentPoly::var(1, 0);
        let zero = LaurentPoly::zero(1);
        assert_eq!(zero.exact_div(&x).unwrap(), zero);
        assert_eq!(x.exact_div(&zero).unwrap_err(), LaurentError::ZeroDivisor);
    }

    #[test]
    fn exact_div_multi_term_quotient() {
        // (x + y)(x^2 - x y + y^2 + 3) has a nontrivial quotient shape.
        let (x, y) = xy();
        let q = x.add(&y).unwrap();
        let r = x
            .pow(2)
            .sub(&x.multiply(&y).unwrap())
            .unwrap()
            .add(&y.pow(2))
            .unwrap()
            .add(&LaurentPoly::constant(2, 3))
            .unwrap();
        let p = q.multiply(&r).unwrap();
        assert_eq!(p.exact_div(&q).unwrap(), r);
        assert_eq!(p.exact_div(&r).unwrap(), q);
    }

    #[test]
    fn display_examples() {
        let p = LaurentPoly::monomial(4, &[1, 0, -1, 1], 1)
            .add(&LaurentPoly::monomial(4, &[0, 1, -1, 0], 1))
            .unwrap();
        assert_eq!(format!("{p}"), "x1 x3^-1 x4 + x2 x3^-1");
        let c = LaurentPoly::constant(2, -5);
        assert_eq!(format!("{c}"), "-5");
        assert_eq!(format!("{}", LaurentPoly::zero(3)), "0");
        let q = LaurentPoly::monomial(1, &[2], -3)
            .add(&LaurentPoly::constant(1, 1))
            .unwrap();
        assert_eq!(format!("{q}"), "-3 * x1^2 + 1");
    }

    #[test]
    fn parse_round_trip() {
        let polys = [
            LaurentPoly::zero(3),
            LaurentPoly::one(3),
            LaurentPoly::constant(3, -42),
            LaurentPoly::var(3, 2),
            LaurentPoly::monomial(3, &[1, -2, 3], 7)
                .add(&LaurentPoly::monomial(3, &[0, 0, -1], -11))
                .unwrap()
                .add(&LaurentPoly::constant(3, 5))
                .unwrap(),
        ];
        for p in polys {
            let shown = format!("{p}");
            let back = LaurentPoly::parse(&shown, 3).unwrap();
            assert_eq!(back, p, "round trip failed for `{shown}`");
        }
    }

    #[test]
    fn parse_accepts_explicit_unit_coefficients() {
        let p = LaurentPoly::parse("1 * x1 + -1 * x2", 2);
        // `+ -1` is not produced by Display but the explicit form is fine.
        let q = LaurentPoly::parse("1 * x1 - 1 * x2", 2).unwrap();
        assert_eq!(p.unwrap(), q);
        let r = LaurentPoly::parse("x1 x1 x2", 2).unwrap();
        assert_eq!(r, LaurentPoly::monomial(2, &[2, 1], 1));
    }

    #[test]
    fn parse_rejects_garbage() {
        assert!(LaurentPoly::parse("", 2).is_err());
        assert!(LaurentPoly::parse("x0", 2).is_err());
        assert!(LaurentPoly::parse("x3", 2).is_err());
        assert!(LaurentPoly::parse("x1 + ", 2).is_err());
        assert!(LaurentPoly::parse("y1", 2).is_err());
        assert!(LaurentPoly::parse("x1^", 2).is_err());
    }

    #[test]
    fn eval_rational_points() {
        let p = LaurentPoly::monomial(2, &[1, -1], 1)
            .add(&LaurentPoly::constant(2, 1))
            .unwrap();
        let two = BigRational::from_integer(2.into());
        let three = BigRational::from_integer(3.into());
        let v = p.eval_rational(&[two, three.clone()]).unwrap();
        assert_eq!(v, BigRational::new(5.into(), 3.into()));
        let zero = BigRational::zero();
        assert_eq!(
            p.eval_rational(&[three, zero]).unwrap_err(),
            LaurentError::ZeroToNegativePower { var: 1 }
        );
    }

    #[test]
    fn eval_zero_base_with_positive_exponent_is_fine() {
        let p = LaurentPoly::monomial(2, &[2, 0], 5)
            .add(&LaurentPoly::constant(2, 3))
            .unwrap();
        let zero = BigRational::zero();
        let one = BigRational::one();
        assert_eq!(p.eval_rational(&[zero, one]).unwrap(), BigRational::from_integer(3.into()));
    }

    #[test]
    fn rational_fn_cross_multiplied_equality() {
        let (x, y) = xy();
        // x/y == x^2 / (x y)
        let a = RationalFn::new(x.clone(), y.clone()).unwrap();
        let b = RationalFn::new(x.pow(2), x.multiply(&y).unwrap()).unwrap();
        assert_eq!(a, b);
        let c = RationalFn::new(y.clone(), x.clone()).unwrap();
        assert_ne!(a, c);
        assert!(RationalFn::new(x, LaurentPoly::zero(2)).is_err());
    }

    #[test]
    fn ordering_is_total_and_degree_graded() {
        let (x, y) = xy();
        // Same degree: lex on exponents decides.
        assert!(x > y);
        let c = LaurentPoly::one(2);
        assert!(x > c);
        let xinv = LaurentPoly::monomial(2, &[-1, 0], 1);
        assert!(c > xinv);
    }
}
