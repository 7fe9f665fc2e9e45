//! Univariate and piecewise polynomial functions with exact rational
//! coefficients, supporting the staircase evaluations.
//!
//! A piecewise polynomial is a continuous function on `[0, inf)` given by a
//! finite list of interior breakpoints and one polynomial per interval.
//! Adjacent intervals with identical polynomials are merged.

use crate::error::{Error, Result};
use crate::partition::factorial;
use num::bigint::BigInt;
use num::rational::BigRational;
use num::traits::{One, Signed, Zero};
use serde_json::{json, Value};
use std::fmt;

/// Dense univariate polynomial, coefficients ascending by degree.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct UniPoly {
    coeffs: Vec<BigRational>,
}

impl UniPoly {
    pub fn new(mut coeffs: Vec<BigRational>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        UniPoly { coeffs }
    }

    pub fn zero() -> Self {
        UniPoly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        UniPoly::constant(BigRational::one())
    }

    pub fn constant(c: BigRational) -> Self {
        UniPoly::new(vec![c])
    }

    pub fn from_ints(coeffs: &[i64]) -> Self {
        UniPoly::new(coeffs.iter().map(|&c| BigRational::from_integer(BigInt::from(c))).collect())
    }

    pub fn x() -> Self {
        UniPoly::new(vec![BigRational::zero(), BigRational::one()])
    }

    pub fn coeffs(&self) -> &[BigRational] {
        &self.coeffs
    }

    pub fn coeff(&self, k: usize) -> BigRational {
        self.coeffs.get(k).cloned().unwrap_or_else(BigRational::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree; zero polynomial reports 0.
    pub fn degree(&self) -> usize {
        self.coeffs.len().saturating_sub(1)
    }

    pub fn leading(&self) -> BigRational {
        self.coeffs.last().cloned().unwrap_or_else(BigRational::zero)
    }

    pub fn add(&self, other: &UniPoly) -> UniPoly {
        let n = self.coeffs.len().max(other.coeffs.len());
        let coeffs = (0..n).map(|k| self.coeff(k) + other.coeff(k)).collect();
        UniPoly::new(coeffs)
    }

    pub fn sub(&self, other: &UniPoly) -> UniPoly {
        self.add(&other.scale(&-BigRational::one()))
    }

    pub fn scale(&self, c: &BigRational) -> UniPoly {
        UniPoly::new(self.coeffs.iter().map(|k| k * c).collect())
    }

    pub fn mul(&self, other: &UniPoly) -> UniPoly {
        if self.is_zero() || other.is_zero() {
            return UniPoly::zero();
        }
        let mut coeffs = vec![BigRational::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in other.coeffs.iter().enumerate() {
                coeffs[i + j] += a * b;
            }
        }
        UniPoly::new(coeffs)
    }

    pub fn eval(&self, x: &BigRational) -> BigRational {
        let mut acc = BigRational::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }

    pub fn eval_int(&self, x: i64) -> BigRational {
        self.eval(&BigRational::from_integer(BigInt::from(x)))
    }

    pub fn derivative(&self) -> UniPoly {
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .skip(1)
            .map(|(k, c)| c * BigRational::from_integer(BigInt::from(k as i64)))
            .collect();
        UniPoly::new(coeffs)
    }

    /// Euclidean remainder.
    pub fn rem(&self, divisor: &UniPoly) -> UniPoly {
        assert!(!divisor.is_zero(), "division by the zero polynomial");
        let mut r = self.clone();
        let dlead = divisor.leading();
        let ddeg = divisor.degree();
        while !r.is_zero() && r.degree() >= ddeg {
            let shift = r.degree() - ddeg;
            let factor = r.leading() / &dlead;
            let mut sub = vec![BigRational::zero(); shift];
            sub.extend(divisor.coeffs.iter().map(|c| c * &factor));
            r = r.sub(&UniPoly::new(sub));
        }
        r
    }

    pub fn div_exact(&self, divisor: &UniPoly) -> UniPoly {
        assert!(!divisor.is_zero(), "division by the zero polynomial");
        let mut r = self.clone();
        let mut q = vec![BigRational::zero(); self.coeffs.len()];
        let dlead = divisor.leading();
        let ddeg = divisor.degree();
        while !r.is_zero() && r.degree() >= ddeg {
            let shift = r.degree() - ddeg;
            let factor = r.leading() / &dlead;
            q[shift] = factor.clone();
            let mut sub = vec![BigRational::zero(); shift];
            sub.extend(divisor.coeffs.iter().map(|c| c * &factor));
            r = r.sub(&UniPoly::new(sub));
        }
        assert!(r.is_zero(), "inexact polynomial division");
        UniPoly::new(q)
    }

    fn monic(&self) -> UniPoly {
        if self.is_zero() {
            return UniPoly::zero();
        }
        let inv = BigRational::one() / self.leading();
        self.scale(&inv)
    }

    pub fn gcd(&self, other: &UniPoly) -> UniPoly {
        let (mut a, mut b) = (self.clone(), other.clone());
        while !b.is_zero() {
            let r = a.rem(&b);
            a = b;
            b = r;
        }
        a.monic()
    }

    /// Real roots with multiplicity, each isolated to width below `1/10^4`.
    /// Returned as (approximation, multiplicity), ascending.
    pub fn real_roots(&self) -> Vec<(f64, usize)> {
        let mut out: Vec<(BigRational, usize)> = Vec::new();
        // square-free decomposition by repeated gcd with the derivative
        let mut rest = self.clone();
        let mut mult = 0usize;
        while rest.degree() >= 1 {
            mult += 1;
            let g = rest.gcd(&rest.derivative());
            let squarefree = rest.div_exact(&g);
            // roots of `squarefree` not shared with `g` have multiplicity
            // exactly `mult` in the original
            for r in squarefree.isolated_roots() {
                if !out.iter().any(|(x, _)| *x == r) {
                    out.push((r, 0));
                }
            }
            rest = g;
        }
        let _ = mult;
        // recompute exact multiplicities by repeated division tests
        let mut result: Vec<(BigRational, usize)> = Vec::new();
        for (r, _) in out {
            let mut m = 0usize;
            let mut p = self.clone();
            loop {
                if p.is_zero() || !p.eval(&r).is_zero() {
                    break;
                }
                // divide by (x - r)
                let lin = UniPoly::new(vec![-r.clone(), BigRational::one()]);
                p = p.div_exact(&lin);
                m += 1;
            }
            if m > 0 {
                result.push((r, m));
            }
        }
        result.sort_by(|a, b| a.0.cmp(&b.0));
        result
            .into_iter()
            .map(|(r, m)| (rational_to_f64(&r), m))
            .collect()
    }

    /// Roots of a square-free polynomial, isolated by Sturm sequences and
    /// refined by bisection. Rational roots are returned exactly.
    fn isolated_roots(&self) -> Vec<BigRational> {
        if self.degree() < 1 {
            return Vec::new();
        }
        let sturm = self.sturm_sequence();
        let bound = self.cauchy_bound();
        let lo = -bound.clone();
        let hi = bound;
        let mut out = Vec::new();
        let mut stack = vec![(lo, hi)];
        let eps = BigRational::new(BigInt::one(), BigInt::from(10_000));
        while let Some((a, b)) = stack.pop() {
            let count = sturm_count(&sturm, &a) - sturm_count(&sturm, &b);
            if count == 0 {
                continue;
            }
            let mid = (&a + &b) / BigRational::from_integer(BigInt::from(2));
            if count == 1 && (&b - &a) < eps {
                out.push(refine_root(self, a, b));
                continue;
            }
            if self.eval(&mid).is_zero() {
                out.push(mid.clone());
                // shrink slightly past the root on both sides
                let delta = (&b - &a) / BigRational::from_integer(BigInt::from(1_000_000));
                stack.push((a, &mid - &delta));
                stack.push((&mid + &delta, b));
            } else {
                stack.push((a, mid.clone()));
                stack.push((mid, b));
            }
        }
        out.sort();
        out.dedup();
        out
    }

    fn sturm_sequence(&self) -> Vec<UniPoly> {
        let mut seq = vec![self.clone(), self.derivative()];
        loop {
            let n = seq.len();
            if seq[n - 1].is_zero() {
                seq.pop();
                return seq;
            }
            let r = seq[n - 2].rem(&seq[n - 1]).scale(&-BigRational::one());
            if r.is_zero() {
                return seq;
            }
            seq.push(r);
        }
    }

    /// 1 + max |a_i / a_n| bounds the absolute value of every root.
    fn cauchy_bound(&self) -> BigRational {
        let lead = self.leading();
        let mut best = BigRational::zero();
        for c in &self.coeffs[..self.coeffs.len() - 1] {
            let q = (c / &lead).abs();
            if q > best {
                best = q;
            }
        }
        best + BigRational::one()
    }
}

fn sturm_count(seq: &[UniPoly], x: &BigRational) -> usize {
    let mut signs = seq
        .iter()
        .map(|p| p.eval(x))
        .filter(|v| !v.is_zero())
        .map(|v| v.is_positive());
    let mut count = 0;
    if let Some(mut prev) = signs.next() {
        for s in signs {
            if s != prev {
                count += 1;
            }
            prev = s;
        }
    }
    count
}

fn refine_root(p: &UniPoly, mut a: BigRational, mut b: BigRational) -> BigRational {
    // exact rational root if the endpoints bracket one of low height
    let fa = p.eval(&a);
    if fa.is_zero() {
        return a;
    }
    if p.eval(&b).is_zero() {
        return b;
    }
    let two = BigRational::from_integer(BigInt::from(2));
    for _ in 0..8 {
        let mid = (&a + &b) / &two;
        let fm = p.eval(&mid);
        if fm.is_zero() {
            return mid;
        }
        if fm.is_positive() == fa.is_positive() {
            a = mid;
        } else {
            b = mid;
        }
    }
    (&a + &b) / two
}

fn rational_to_f64(r: &BigRational) -> f64 {
    let scale = BigInt::from(1_000_000_000i64);
    let scaled = (r * BigRational::from_integer(scale.clone())).round();
    let (sign, digits) = scaled.numer().to_u64_digits();
    let mut v = 0f64;
    for d in digits.iter().rev() {
        v = v * (u64::MAX as f64 + 1.0) + *d as f64;
    }
    if sign == num::bigint::Sign::Minus {
        v = -v;
    }
    v / 1e9
}

impl fmt::Display for UniPoly {
    fmt_unipoly!();
}

macro_rules! fmt_unipoly {
    () => {
        fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
            if self.is_zero() {
                return write!(f, "0");
            }
            let mut first = true;
            for (k, c) in self.coeffs.iter().enumerate().rev() {
                if c.is_zero() {
                    continue;
                }
                let neg = c.is_negative();
                let abs = c.abs();
                if first {
                    if neg {
                        write!(f, "-")?;
                    }
                    first = false;
                } else if neg {
                    write!(f, " - ")?;
                } else {
                    write!(f, " + ")?;
                }
                let show_coeff = !abs.is_one() || k == 0;
                if show_coeff {
                    write!(f, "{}", crate::poly::rational_string(&abs))?;
                }
                if k == 1 {
                    if show_coeff {
                        write!(f, "x")?;
                    } else {
                        write!(f, "x")?;
                    }
                } else if k > 1 {
                    write!(f, "x^{k}")?;
                }
            }
            Ok(())
        }
    };
}
use fmt_unipoly;

/// Continuous piecewise polynomial on `[0, inf)`. `pieces[i]` holds on the
/// interval from `cuts[i-1]` (or 0) to `cuts[i]` (or infinity).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PiecewisePoly {
    cuts: Vec<BigRational>,
    pieces: Vec<UniPoly>,
}

impl PiecewisePoly {
    pub fn from_poly(p: UniPoly) -> Self {
        PiecewisePoly { cuts: Vec::new(), pieces: vec![p] }
    }

    pub fn zero() -> Self {
        PiecewisePoly::from_poly(UniPoly::zero())
    }

    pub fn one() -> Self {
        PiecewisePoly::from_poly(UniPoly::one())
    }

    /// Zero on `[0, a+b-1]` and `C(x-b, a)` afterwards. Requires `a >= 1`.
    pub fn step_binomial(a: u64, b: u64) -> Self {
        assert!(a >= 1, "step binomial needs a >= 1");
        let mut poly = UniPoly::one();
        for j in 0..a {
            let shift = BigRational::from_integer(BigInt::from(b + j));
            poly = poly.mul(&UniPoly::new(vec![-shift, BigRational::one()]));
        }
        poly = poly.scale(&BigRational::new(BigInt::one(), factorial(a)));
        let cut = a + b - 1;
        if cut == 0 {
            return PiecewisePoly::from_poly(poly);
        }
        PiecewisePoly {
            cuts: vec![BigRational::from_integer(BigInt::from(cut))],
            pieces: vec![UniPoly::zero(), poly],
        }
        .merged()
    }

    pub fn cuts(&self) -> &[BigRational] {
        &self.cuts
    }

    pub fn pieces(&self) -> &[UniPoly] {
        &self.pieces
    }

    /// The polynomial on the unbounded final interval.
    pub fn last_piece(&self) -> &UniPoly {
        self.pieces.last().expect("at least one piece")
    }

    /// Start of the final interval (0 when the function is a single
    /// polynomial).
    pub fn last_cut(&self) -> BigRational {
        self.cuts.last().cloned().unwrap_or_else(BigRational::zero)
    }

    /// The polynomial valid on an interval containing `x`.
    pub fn piece_at(&self, x: &BigRational) -> &UniPoly {
        let idx = self.cuts.iter().position(|c| x < c).unwrap_or(self.pieces.len() - 1);
        &self.pieces[idx]
    }

    pub fn eval(&self, x: &BigRational) -> BigRational {
        self.piece_at(x).eval(x)
    }

    pub fn eval_int(&self, x: u64) -> BigRational {
        self.eval(&BigRational::from_integer(BigInt::from(x)))
    }

    fn merged(mut self) -> Self {
        let mut i = 0;
        while i < self.cuts.len() {
            if self.pieces[i] == self.pieces[i + 1] {
                self.cuts.remove(i);
                self.pieces.remove(i);
            } else {
                i += 1;
            }
        }
        self
    }

    fn zip_with(&self, other: &PiecewisePoly, f: impl Fn(&UniPoly, &UniPoly) -> UniPoly) -> PiecewisePoly {
        let mut cuts: Vec<BigRational> = self.cuts.iter().chain(other.cuts.iter()).cloned().collect();
        cuts.sort();
        cuts.dedup();
        let mut pieces = Vec::with_capacity(cuts.len() + 1);
        for i in 0..=cuts.len() {
            // a probe point inside piece i: below the first cut, between two
            // cuts, or above the last
            let probe = if i < cuts.len() {
                if i == 0 {
                    &cuts[0] - BigRational::one()
                } else {
                    (&cuts[i - 1] + &cuts[i]) / BigRational::from_integer(BigInt::from(2))
                }
            } else if cuts.is_empty() {
                BigRational::zero()
            } else {
                &cuts[cuts.len() - 1] + BigRational::one()
            };
            pieces.push(f(self.piece_at(&probe), other.piece_at(&probe)));
        }
        PiecewisePoly { cuts, pieces }.merged()
    }

    pub fn add(&self, other: &PiecewisePoly) -> PiecewisePoly {
        self.zip_with(other, UniPoly::add)
    }

    pub fn mul(&self, other: &PiecewisePoly) -> PiecewisePoly {
        self.zip_with(other, UniPoly::mul)
    }

    pub fn scale(&self, c: &BigRational) -> PiecewisePoly {
        PiecewisePoly {
            cuts: self.cuts.clone(),
            pieces: self.pieces.iter().map(|p| p.scale(c)).collect(),
        }
        .merged()
    }

    pub fn scale_int(&self, c: &BigInt) -> PiecewisePoly {
        self.scale(&BigRational::from_integer(c.clone()))
    }

    /// Adjacent pieces must agree at every breakpoint.
    pub fn is_continuous(&self) -> bool {
        self.cuts
            .iter()
            .enumerate()
            .all(|(i, c)| self.pieces[i].eval(c) == self.pieces[i + 1].eval(c))
    }

    /// JSON form `{"breaks": ["0", ..., "inf"], "pieces": [[coeffs...], ...]}`.
    pub fn to_json(&self) -> Value {
        let mut breaks: Vec<Value> = vec![json!("0")];
        for c in &self.cuts {
            breaks.push(json!(crate::poly::rational_string(c)));
        }
        breaks.push(json!("inf"));
        let pieces: Vec<Value> = self
            .pieces
            .iter()
            .map(|p| {
                Value::Array(
                    p.coeffs()
                        .iter()
                        .map(|c| json!(crate::poly::rational_string(c)))
                        .collect(),
                )
            })
            .collect();
        json!({ "breaks": breaks, "pieces": pieces })
    }

    pub fn from_json(v: &Value) -> Result<PiecewisePoly> {
        let bad = || Error::Invalid("malformed piecewise polynomial JSON".into());
        let breaks = v.get("breaks").and_then(Value::as_array).ok_or_else(bad)?;
        if breaks.len() < 2 {
            return Err(bad());
        }
        let cuts = breaks[1..breaks.len() - 1]
            .iter()
            .map(|b| crate::poly::parse_rational(b.as_str().ok_or_else(bad)?))
            .collect::<Result<Vec<_>>>()?;
        let pieces = v
            .get("pieces")
            .and_then(Value::as_array)
            .ok_or_else(bad)?
            .iter()
            .map(|p| {
                let coeffs = p
                    .as_array()
                    .ok_or_else(bad)?
                    .iter()
                    .map(|c| crate::poly::parse_rational(c.as_str().ok_or_else(bad)?))
                    .collect::<Result<Vec<_>>>()?;
                Ok(UniPoly::new(coeffs))
            })
            .collect::<Result<Vec<_>>>()?;
        if pieces.len() != cuts.len() + 1 {
            return Err(bad());
        }
        Ok(PiecewisePoly { cuts, pieces })
    }
}

impl fmt::Display for PiecewisePoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, p) in self.pieces.iter().enumerate() {
            let lo = if i == 0 {
                "0".to_string()
            } else {
                crate::poly::rational_string(&self.cuts[i - 1])
            };
            let hi = if i < self.cuts.len() {
                crate::poly::rational_string(&self.cuts[i])
            } else {
                "inf".to_string()
            };
            if i > 0 {
                writeln!(f)?;
            }
            write!(f, "[{lo}, {hi}]: {p}")?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn rat(n: i64) -> BigRational {
        BigRational::from_integer(BigInt::from(n))
    }

    #[test]
    fn step_binomial_examples() {
        let f10 = PiecewisePoly::step_binomial(1, 0);
        assert_eq!(f10.pieces().len(), 1);
        assert_eq!(f10.eval(&rat(5)), rat(5));
        let f21 = PiecewisePoly::step_binomial(2, 1);
        assert_eq!(f21.eval(&rat(4)), rat(3));
        assert_eq!(f21.eval(&rat(2)), rat(0));
        assert_eq!(f21.eval(&rat(1)), rat(0));
    }

    #[test]
    fn step_binomials_are_nonnegative_integers_on_naturals() {
        for a in 1..=4u64 {
            for b in 0..=3u64 {
                let f = PiecewisePoly::step_binomial(a, b);
                assert!(f.is_continuous());
                for n in 0..=10u64 {
                    let v = f.eval_int(n);
                    assert!(v.denom().is_one(), "f_{{{a},{b}}}({n}) = {v}");
                    assert!(!v.is_negative());
                }
            }
        }
    }

    #[test]
    fn arithmetic_preserves_continuity() {
        let f = PiecewisePoly::step_binomial(2, 0);
        let g = PiecewisePoly::step_binomial(1, 2);
        let h = f.mul(&g).add(&f.scale(&rat(3)));
        assert!(h.is_continuous());
        for n in 0..=9u64 {
            let expect = f.eval_int(n) * g.eval_int(n) + rat(3) * f.eval_int(n);
            assert_eq!(h.eval_int(n), expect);
        }
    }

    #[test]
    fn json_round_trip() {
        let f = PiecewisePoly::step_binomial(3, 1).add(&PiecewisePoly::one());
        let g = PiecewisePoly::from_json(&f.to_json()).unwrap();
        assert_eq!(f, g);
    }

    #[test]
    fn root_isolation() {
        // (x-1)^2 (x-3)
        let p = UniPoly::from_ints(&[-3, 7, -5, 1]);
        let roots = p.real_roots();
        assert_eq!(roots.len(), 2);
        assert_eq!(roots[0].1, 2);
        assert!((roots[0].0 - 1.0).abs() < 1e-3);
        assert_eq!(roots[1].1, 1);
        assert!((roots[1].0 - 3.0).abs() < 1e-3);
        // x^2 - 2x: roots 0 and 2
        let q = UniPoly::from_ints(&[0, -2, 1]);
        let roots = q.real_roots();
        assert_eq!(roots.len(), 2);
        assert!((roots[0].0 - 0.0).abs() < 1e-3);
        assert!((roots[1].0 - 2.0).abs() < 1e-3);
        // irrational roots of x^2 - 2
        let r = UniPoly::from_ints(&[-2, 0, 1]);
        let roots = r.real_roots();
        assert_eq!(roots.len(), 2);
        assert!((roots[1].0 - 1.41421356).abs() < 1e-3);
    }

    proptest! {
        #[test]
        fn piecewise_ops_stay_continuous(
            a in 1u64..4, b in 0u64..4, c in 1u64..4, d in 0u64..4, s in -3i64..4
        ) {
            let f = PiecewisePoly::step_binomial(a, b);
            let g = PiecewisePoly::step_binomial(c, d);
            let h = f.mul(&g).add(&g.scale(&rat(s)));
            prop_assert!(h.is_continuous());
        }
    }
}
