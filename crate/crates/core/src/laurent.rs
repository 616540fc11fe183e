//! Multivariate Laurent polynomials with big-integer coefficients.
//!
//! Terms are kept in a `BTreeMap` keyed by [`Monomial`], whose ordering is
//! graded lexicographic (total degree first, then exponent of `y1`, `y2`, ...).
//! That ordering drives both exact division and every printed form.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt::{self, Write as _};
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Monomial(Vec<i64>);

impl Monomial {
    pub fn one(n: usize) -> Self {
        Monomial(vec![0; n])
    }

    pub fn from_exps(exps: Vec<i64>) -> Self {
        Monomial(exps)
    }

    pub fn exps(&self) -> &[i64] {
        &self.0
    }

    pub fn degree(&self) -> i64 {
        self.0.iter().sum()
    }

    pub fn is_one(&self) -> bool {
        self.0.iter().all(|&e| e == 0)
    }

    fn mul(&self, other: &Monomial) -> Monomial {
        Monomial(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    fn div(&self, other: &Monomial) -> Monomial {
        Monomial(self.0.iter().zip(&other.0).map(|(a, b)| a - b).collect())
    }

    fn divisible_by(&self, other: &Monomial) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| a >= b)
    }

    fn write(&self, f: &mut impl fmt::Write) -> fmt::Result {
        let mut first = true;
        for (i, &e) in self.0.iter().enumerate() {
            if e == 0 {
                continue;
            }
            if !first {
                f.write_char('*')?;
            }
            first = false;
            if e == 1 {
                write!(f, "y{}", i + 1)?;
            } else {
                write!(f, "y{}^{}", i + 1, e)?;
            }
        }
        if first {
            f.write_char('1')?;
        }
        Ok(())
    }

    fn factor_count(&self) -> usize {
        self.0.iter().filter(|&&e| e != 0).count()
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree().cmp(&other.degree()).then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.write(f)
    }
}

/// Exponent vector of the reduced denominator. Negative entries mark initial
/// variables sitting in the numerator.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct DenomVector(pub Vec<i64>);

impl DenomVector {
    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn entries(&self) -> &[i64] {
        &self.0
    }
}

impl fmt::Display for DenomVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(i64::to_string).collect();
        write!(f, "({})", parts.join(","))
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct LaurentPoly {
    n: usize,
    terms: BTreeMap<Monomial, BigInt>,
}

impl LaurentPoly {
    pub fn zero(n: usize) -> Self {
        Self { n, terms: BTreeMap::new() }
    }

    pub fn one(n: usize) -> Self {
        Self::constant(n, 1)
    }

    pub fn constant(n: usize, c: impl Into<BigInt>) -> Self {
        Self::term(Monomial::one(n), c.into())
    }

    /// The variable `y_{i+1}` (0-indexed `i`).
    pub fn var(n: usize, i: usize) -> Self {
        let mut exps = vec![0; n];
        exps[i] = 1;
        Self::term(Monomial(exps), BigInt::one())
    }

    pub fn monomial(exps: Vec<i64>) -> Self {
        Self::term(Monomial(exps), BigInt::one())
    }

    pub fn term(m: Monomial, c: BigInt) -> Self {
        let n = m.0.len();
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(m, c);
        }
        Self { n, terms }
    }

    pub fn from_terms(n: usize, terms: impl IntoIterator<Item = (Vec<i64>, BigInt)>) -> Self {
        let mut p = Self::zero(n);
        for (exps, c) in terms {
            assert_eq!(exps.len(), n, "exponent vector length");
            p.add_term(Monomial(exps), c);
        }
        p
    }

    pub fn nvars(&self) -> usize {
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

    /// Terms in descending graded-lex order.
    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &BigInt)> {
        self.terms.iter().rev()
    }

    pub fn leading(&self) -> Option<(&Monomial, &BigInt)> {
        self.terms.iter().next_back()
    }

    fn add_term(&mut self, m: Monomial, c: BigInt) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                *e.get_mut() += c;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    fn check_arity(&self, other: &Self) {
        assert_eq!(self.n, other.n, "Laurent polynomials over different variable sets");
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut acc = Self::one(self.n);
        for _ in 0..e {
            acc = &acc * self;
        }
        acc
    }

    /// Multiplies by the monomial `y^exps`.
    pub fn shift(&self, exps: &[i64]) -> Self {
        let m = Monomial(exps.to_vec());
        Self { n: self.n, terms: self.terms.iter().map(|(k, c)| (k.mul(&m), c.clone())).collect() }
    }

    /// Componentwise minimum exponent over all terms; zeros for the zero polynomial.
    pub fn min_exponents(&self) -> Vec<i64> {
        let mut it = self.terms.keys();
        let Some(first) = it.next() else { return vec![0; self.n] };
        let mut mins = first.0.clone();
        for m in it {
            for (lo, &e) in mins.iter_mut().zip(&m.0) {
                *lo = (*lo).min(e);
            }
        }
        mins
    }

    pub fn is_polynomial(&self) -> bool {
        self.terms.keys().all(|m| m.0.iter().all(|&e| e >= 0))
    }

    pub fn is_monomial(&self) -> bool {
        self.terms.len() == 1
    }

    /// Returns `r` with `r * divisor == self`.
    pub fn exact_div(&self, divisor: &Self) -> Result<Self> {
        self.check_arity(divisor);
        let non_exact = || Error::NonExactDivision { dividend: self.to_string(), divisor: divisor.to_string() };
        if divisor.is_zero() {
            return Err(non_exact());
        }
        let p_min = self.min_exponents();
        let q_min = divisor.min_exponents();
        let neg = |v: &[i64]| v.iter().map(|e| -e).collect::<Vec<_>>();
        let mut rem = self.shift(&neg(&p_min));
        let q = divisor.shift(&neg(&q_min));

        let (lm_q, lc_q) = q.leading().map(|(m, c)| (m.clone(), c.clone())).unwrap();
        let mut quotient = Self::zero(self.n);
        while let Some((lm, lc)) = rem.leading() {
            if !lm.divisible_by(&lm_q) || !(lc % &lc_q).is_zero() {
                return Err(non_exact());
            }
            let t = Self::term(lm.div(&lm_q), lc / &lc_q);
            rem = &rem - &(&t * &q);
            quotient = &quotient + &t;
        }
        let offset: Vec<i64> = p_min.iter().zip(&q_min).map(|(a, b)| a - b).collect();
        Ok(quotient.shift(&offset))
    }

    /// `d_i = -(min exponent of y_i)`, so that `self = f / prod y_i^{d_i}` with
    /// `f` a polynomial divisible by no `y_i`.
    pub fn denominator_vector(&self) -> Result<DenomVector> {
        if self.is_zero() {
            return Err(Error::ZeroPolynomial);
        }
        Ok(DenomVector(self.min_exponents().into_iter().map(|e| -e).collect()))
    }

    /// The polynomial `f` in `self = f / y^d` with `d` the denominator vector.
    pub fn reduced_numerator(&self) -> Result<Self> {
        let d = self.denominator_vector()?;
        Ok(self.shift(&d.0))
    }

    /// `f(e_i) > 0` for every `i`, where `e_i` is all ones except a zero in slot `i`.
    pub fn positivity_check(&self) -> Result<bool> {
        if !self.is_polynomial() {
            return Err(Error::NegativeExponent(self.to_string()));
        }
        Ok((0..self.n).all(|i| self.eval_at_unit_except(i).is_positive()))
    }

    fn eval_at_unit_except(&self, i: usize) -> BigInt {
        self.terms.iter().filter(|(m, _)| m.0[i] == 0).map(|(_, c)| c).sum()
    }

    /// Evaluates at an integer point with all coordinates nonzero where a
    /// negative exponent occurs; returns `None` on division by zero or a
    /// non-integral value.
    pub fn eval_integer(&self, point: &[i64]) -> Option<num_rational::BigRational> {
        use num_rational::BigRational;
        let mut total = BigRational::zero();
        for (m, c) in &self.terms {
            let mut v = BigRational::from_integer(c.clone());
            for (&e, &x) in m.0.iter().zip(point) {
                if e == 0 {
                    continue;
                }
                if x == 0 && e < 0 {
                    return None;
                }
                let base = BigRational::from_integer(BigInt::from(x));
                let p = num_traits::pow(base.clone(), e.unsigned_abs() as usize);
                v = if e > 0 { v * p } else { v / p };
            }
            total += v;
        }
        Some(total)
    }

    fn write_poly(&self, f: &mut impl fmt::Write) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_char('0');
        }
        for (idx, (m, c)) in self.terms().enumerate() {
            let negative = c.is_negative();
            match (idx, negative) {
                (0, true) => f.write_char('-')?,
                (0, false) => {}
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            let abs = c.abs();
            if m.is_one() {
                write!(f, "{abs}")?;
            } else if abs.is_one() {
                m.write(f)?;
            } else {
                write!(f, "{abs}*")?;
                m.write(f)?;
            }
        }
        Ok(())
    }

    /// Raw machine form: `y1^-1*y2^-1*(numerator)` or just the polynomial.
    pub fn raw_string(&self) -> String {
        let mins = self.min_exponents();
        let mut s = String::new();
        if mins.iter().all(|&e| e >= 0) {
            self.write_poly(&mut s).unwrap();
            return s;
        }
        let clear: Vec<i64> = mins.iter().map(|&e| (-e).max(0)).collect();
        let prefix = Monomial(clear.iter().map(|e| -e).collect());
        prefix.write(&mut s).unwrap();
        s.push_str("*(");
        self.shift(&clear).write_poly(&mut s).unwrap();
        s.push(')');
        s
    }

    pub fn parse(text: &str, n: usize) -> Result<Self> {
        parse::Parser::new(text, n).parse_all()
    }
}

/// Reduced-fraction display, e.g. `(y1^2 + y1*y3 + y2) / (y2*y3)`.
impl fmt::Display for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_char('0');
        }
        let mins = self.min_exponents();
        let clear: Vec<i64> = mins.iter().map(|&e| (-e).max(0)).collect();
        if clear.iter().all(|&e| e == 0) {
            return self.write_poly(f);
        }
        let num = self.shift(&clear);
        let den = Monomial(clear);
        if num.len() > 1 {
            f.write_char('(')?;
            num.write_poly(f)?;
            f.write_char(')')?;
        } else {
            num.write_poly(f)?;
        }
        f.write_str(" / ")?;
        if den.factor_count() > 1 {
            f.write_char('(')?;
            den.write(f)?;
            f.write_char(')')
        } else {
            den.write(f)
        }
    }
}

impl Add for &LaurentPoly {
    type Output = LaurentPoly;
    fn add(self, rhs: &LaurentPoly) -> LaurentPoly {
        self.check_arity(rhs);
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(m.clone(), c.clone());
        }
        out
    }
}

impl Sub for &LaurentPoly {
    type Output = LaurentPoly;
    fn sub(self, rhs: &LaurentPoly) -> LaurentPoly {
        self.check_arity(rhs);
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(m.clone(), -c);
        }
        out
    }
}

impl Neg for &LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        LaurentPoly { n: self.n, terms: self.terms.iter().map(|(m, c)| (m.clone(), -c)).collect() }
    }
}

impl Mul for &LaurentPoly {
    type Output = LaurentPoly;
    fn mul(self, rhs: &LaurentPoly) -> LaurentPoly {
        self.check_arity(rhs);
        let mut out = LaurentPoly::zero(self.n);
        for (a, ca) in &self.terms {
            for (b, cb) in &rhs.terms {
                out.add_term(a.mul(b), ca * cb);
            }
        }
        out
    }
}

macro_rules! forward_owned {
    ($tr:ident, $method:ident) => {
        impl $tr for LaurentPoly {
            type Output = LaurentPoly;
            fn $method(self, rhs: LaurentPoly) -> LaurentPoly {
                (&self).$method(&rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

mod parse {
    use super::*;

    /// Recursive-descent parser for expressions such as
    /// `((y1+y3)^2 + y2) / (y1*y2*y3)`. Division must be exact.
    pub(super) struct Parser<'a> {
        src: &'a str,
        bytes: &'a [u8],
        pos: usize,
        n: usize,
    }

    impl<'a> Parser<'a> {
        pub(super) fn new(src: &'a str, n: usize) -> Self {
            Self { src, bytes: src.as_bytes(), pos: 0, n }
        }

        fn err(&self, msg: &str) -> Error {
            Error::Expr(format!("{msg} at offset {} in {:?}", self.pos, self.src))
        }

        fn skip_ws(&mut self) {
            while self.pos < self.bytes.len() && self.bytes[self.pos].is_ascii_whitespace() {
                self.pos += 1;
            }
        }

        fn peek(&mut self) -> Option<u8> {
            self.skip_ws();
            self.bytes.get(self.pos).copied()
        }

        fn eat(&mut self, c: u8) -> bool {
            if self.peek() == Some(c) {
                self.pos += 1;
                true
            } else {
                false
            }
        }

        pub(super) fn parse_all(mut self) -> Result<LaurentPoly> {
            let p = self.expr()?;
            if self.peek().is_some() {
                return Err(self.err("trailing input"));
            }
            Ok(p)
        }

        fn expr(&mut self) -> Result<LaurentPoly> {
            let mut acc = if self.eat(b'-') {
                -&self.term()?
            } else {
                self.eat(b'+');
                self.term()?
            };
            loop {
                if self.eat(b'+') {
                    acc = &acc + &self.term()?;
                } else if self.eat(b'-') {
                    acc = &acc - &self.term()?;
                } else {
                    return Ok(acc);
                }
            }
        }

        fn term(&mut self) -> Result<LaurentPoly> {
            let mut acc = self.power()?;
            loop {
                if self.eat(b'*') {
                    acc = &acc * &self.power()?;
                } else if self.eat(b'/') {
                    let d = self.power()?;
                    acc = acc.exact_div(&d)?;
                } else {
                    return Ok(acc);
                }
            }
        }

        fn power(&mut self) -> Result<LaurentPoly> {
            let base = self.atom()?;
            if !self.eat(b'^') {
                return Ok(base);
            }
            let negative = self.eat(b'-');
            let e = self.integer()?;
            let e = u32::try_from(e).map_err(|_| self.err("exponent too large"))?;
            if negative {
                if !base.is_monomial() {
                    return Err(self.err("negative powers are only allowed on monomials"));
                }
                LaurentPoly::one(self.n).exact_div(&base.pow(e))
            } else {
                Ok(base.pow(e))
            }
        }

        fn integer(&mut self) -> Result<u64> {
            self.skip_ws();
            let start = self.pos;
            while self.pos < self.bytes.len() && self.bytes[self.pos].is_ascii_digit() {
                self.pos += 1;
            }
            self.src[start..self.pos].parse().map_err(|_| self.err("expected integer"))
        }

        fn atom(&mut self) -> Result<LaurentPoly> {
            match self.peek() {
                Some(b'(') => {
                    self.pos += 1;
                    let inner = self.expr()?;
                    if !self.eat(b')') {
                        return Err(self.err("expected `)`"));
                    }
                    Ok(inner)
                }
                Some(b'y') | Some(b'x') => {
                    self.pos += 1;
                    let idx = self.integer()? as usize;
                    if idx == 0 || idx > self.n {
                        return Err(self.err("variable index out of range"));
                    }
                    Ok(LaurentPoly::var(self.n, idx - 1))
                }
                Some(c) if c.is_ascii_digit() => {
                    let start = self.pos;
                    self.integer()?;
                    let v: BigInt = self.src[start..self.pos].parse().map_err(|_| self.err("bad integer"))?;
                    Ok(LaurentPoly::constant(self.n, v))
                }
                _ => Err(self.err("unexpected token")),
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn y(i: usize) -> LaurentPoly {
        LaurentPoly::var(3, i - 1)
    }

    fn p(s: &str) -> LaurentPoly {
        LaurentPoly::parse(s, 3).unwrap()
    }

    #[test]
    fn ring_examples() {
        assert!((&y(1) + &(-&y(1))).is_zero());
        let s = &y(1) + &y(3);
        let sq = &s * &s;
        let expected = &(&y(1).pow(2) + &(&LaurentPoly::constant(3, 2) * &(&y(1) * &y(3)))) + &y(3).pow(2);
        assert_eq!(sq, expected);
        let inv2 = LaurentPoly::monomial(vec![0, -1, 0]);
        let prod = &inv2 * &s;
        assert_eq!(prod, LaurentPoly::from_terms(3, [(vec![1, -1, 0], 1.into()), (vec![0, -1, 1], 1.into())]));
    }

    #[test]
    fn exact_division() {
        let num = &y(1).pow(2) - &y(3).pow(2);
        assert_eq!(num.exact_div(&(&y(1) + &y(3))).unwrap(), &y(1) - &y(3));

        // ((y1+y3)/y2 + 1) / y1
        let step = (&y(1) + &y(3)).exact_div(&y(2)).unwrap();
        let chained = (&step + &LaurentPoly::one(3)).exact_div(&y(1)).unwrap();
        assert_eq!(chained, p("(y1+y2+y3)/(y1*y2)"));

        // Monomials are units in the Laurent ring.
        assert_eq!((&y(1) + &y(3)).exact_div(&y(2)).unwrap(), p("y1/y2 + y3/y2"));
        assert!(matches!((&y(1) + &y(3)).exact_div(&(&y(1) + &y(2))), Err(Error::NonExactDivision { .. })));
        assert!((&y(1) + &y(3)).exact_div(&LaurentPoly::zero(3)).is_err());
        // Laurent divisor with a monomial factor.
        let d = &y(1) * &(&y(1) + &y(3));
        assert_eq!((&y(1) + &y(3)).exact_div(&d).unwrap(), LaurentPoly::monomial(vec![-1, 0, 0]));
        // Integer coefficients that do not divide.
        let two = LaurentPoly::constant(3, 2);
        assert!(y(1).exact_div(&two).is_err());
    }

    #[test]
    fn denominator_vectors() {
        assert_eq!(p("(y1+y2+y3)/(y1*y3)").denominator_vector().unwrap(), DenomVector(vec![1, 0, 1]));
        assert_eq!(y(2).denominator_vector().unwrap(), DenomVector(vec![0, -1, 0]));
        assert_eq!(p("((y1+y3)^2+y2)/(y1*y2*y3)").denominator_vector().unwrap(), DenomVector(vec![1, 1, 1]));
        assert_eq!(LaurentPoly::zero(3).denominator_vector(), Err(Error::ZeroPolynomial));
    }

    #[test]
    fn positivity() {
        assert!(p("y1+y2+y3").positivity_check().unwrap());
        assert!(LaurentPoly::one(3).positivity_check().unwrap());
        assert!(!p("y1-y2").positivity_check().unwrap());
        assert!(p("1/y1").positivity_check().is_err());
        // y2 alone vanishes at e_2
        assert!(!y(2).positivity_check().unwrap());
    }

    #[test]
    fn printing() {
        let v = p("(y1^2 + y2 + y1*y3)/(y2*y3)");
        assert_eq!(v.to_string(), "(y1^2 + y1*y3 + y2) / (y2*y3)");
        assert_eq!(v.raw_string(), "y2^-1*y3^-1*(y1^2 + y1*y3 + y2)");
        assert_eq!(p("(y1+y3)/y2").to_string(), "(y1 + y3) / y2");
        assert_eq!(p("1/(y1*y2^2)").to_string(), "1 / (y1*y2^2)");
        assert_eq!(p("y1 - 2*y2 + 3").to_string(), "y1 - 2*y2 + 3");
        assert_eq!(p("-y3").to_string(), "-y3");
        assert_eq!(LaurentPoly::zero(3).to_string(), "0");
        assert_eq!(y(2).raw_string(), "y2");
    }

    #[test]
    fn parse_errors() {
        assert!(LaurentPoly::parse("y4", 3).is_err());
        assert!(LaurentPoly::parse("(y1+y2", 3).is_err());
        assert!(LaurentPoly::parse("y1 y2", 3).is_err());
        assert!(LaurentPoly::parse("(y1+y2)^-1", 3).is_err());
        assert_eq!(LaurentPoly::parse("y1^-2", 3).unwrap(), LaurentPoly::monomial(vec![-2, 0, 0]));
    }

    #[test]
    fn display_reparses() {
        for s in ["((y1+y3)^2+y2)/(y1*y2*y3)", "y2", "(y1^2+y2)/y3", "-y1/y2 + 7*y3^3"] {
            let v = p(s);
            assert_eq!(p(&v.to_string()), v);
        }
    }

    mod props {
        use super::*;
        use proptest::prelude::*;

        fn laurent() -> impl Strategy<Value = LaurentPoly> {
            proptest::collection::vec((proptest::collection::vec(-2i64..=3, 3), -4i64..=4), 0..5)
                .prop_map(|terms| LaurentPoly::from_terms(3, terms.into_iter().map(|(e, c)| (e, BigInt::from(c)))))
        }

        fn nonzero() -> impl Strategy<Value = LaurentPoly> {
            laurent().prop_filter("nonzero", |p| !p.is_zero())
        }

        proptest! {
            #[test]
            fn ring_laws(a in laurent(), b in laurent(), c in laurent()) {
                prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
                prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
                prop_assert_eq!(&a + &b, &b + &a);
                prop_assert_eq!(&a * &b, &b * &a);
            }

            #[test]
            fn division_inverts_multiplication(a in nonzero(), b in nonzero()) {
                let prod = &a * &b;
                prop_assert_eq!(prod.exact_div(&b).unwrap(), a);
            }

            #[test]
            fn denominator_shifts_with_monomials(a in nonzero(), m in proptest::collection::vec(-3i64..=3, 3)) {
                let shifted = a.shift(&m);
                let d = a.denominator_vector().unwrap();
                let ds = shifted.denominator_vector().unwrap();
                let expected: Vec<i64> = d.0.iter().zip(&m).map(|(x, e)| x - e).collect();
                prop_assert_eq!(ds.0, expected);
            }

            #[test]
            fn reduced_numerator_is_unclearable(a in nonzero()) {
                let f = a.reduced_numerator().unwrap();
                prop_assert!(f.is_polynomial());
                for i in 0..3 {
                    prop_assert!(f.terms().any(|(m, _)| m.exps()[i] == 0));
                }
            }

            #[test]
            fn printed_form_reparses(a in laurent()) {
                prop_assert_eq!(LaurentPoly::parse(&a.to_string(), 3).unwrap(), a.clone());
                prop_assert_eq!(LaurentPoly::parse(&a.raw_string(), 3).unwrap(), a);
            }
        }
    }
}
