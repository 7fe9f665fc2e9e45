//! Sparse multivariate polynomials with exact rational coefficients over
//! variables keyed by diagram class keys.
//!
//! Polynomials carry their own ordered variable list (sorted by class size,
//! then key); arithmetic aligns variable spaces by union. Terms are kept in
//! graded lexicographic order and zero coefficients are never stored, so
//! structural equality of normalized polynomials is semantic equality.

use crate::error::{Error, Result};
use num::bigint::BigInt;
use num::rational::BigRational;
use num::traits::{One, Signed, Zero};
use serde_json::{json, Value};
use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;

/// Size of the diagram class named by a key: total number of cells.
pub fn key_size(key: &str) -> u64 {
    if key.is_empty() {
        return 0;
    }
    key.split(['|', ';'])
        .filter_map(|row| {
            let (s, e) = row.split_once(':')?;
            let s = s.trim().parse::<u64>().ok()?;
            let e = e.trim().parse::<u64>().ok()?;
            Some(e.saturating_sub(s) + 1)
        })
        .sum()
}

fn var_order(a: &str, b: &str) -> Ordering {
    key_size(a).cmp(&key_size(b)).then_with(|| a.cmp(b))
}

/// Exponent vector compared in graded lexicographic order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Monomial(pub Vec<u32>);

impl Monomial {
    pub fn degree(&self) -> u32 {
        self.0.iter().sum()
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree()
            .cmp(&other.degree())
            .then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MultiPoly {
    vars: Vec<String>,
    terms: BTreeMap<Monomial, BigRational>,
}

impl MultiPoly {
    pub fn zero() -> Self {
        MultiPoly { vars: Vec::new(), terms: BTreeMap::new() }
    }

    pub fn one() -> Self {
        MultiPoly::constant(BigRational::one())
    }

    pub fn constant(c: BigRational) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(Monomial(Vec::new()), c);
        }
        MultiPoly { vars: Vec::new(), terms }
    }

    pub fn constant_int(c: i64) -> Self {
        MultiPoly::constant(BigRational::from_integer(BigInt::from(c)))
    }

    /// The variable `x_key`.
    pub fn var(key: &str) -> Self {
        let mut terms = BTreeMap::new();
        terms.insert(Monomial(vec![1]), BigRational::one());
        MultiPoly { vars: vec![key.to_string()], terms }
    }

    pub fn vars(&self) -> &[String] {
        &self.vars
    }

    pub fn terms(&self) -> &BTreeMap<Monomial, BigRational> {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn total_degree(&self) -> u32 {
        self.terms.keys().map(Monomial::degree).max().unwrap_or(0)
    }

    fn insert_term(&mut self, m: Monomial, c: BigRational) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                let sum = e.get() + &c;
                if sum.is_zero() {
                    e.remove();
                } else {
                    *e.get_mut() = sum;
                }
            }
        }
    }

    /// Re-expresses the terms over `target`, which must contain every
    /// variable of `self` (in sorted order).
    fn remap(&self, target: &[String]) -> BTreeMap<Monomial, BigRational> {
        let idx: Vec<usize> = self
            .vars
            .iter()
            .map(|v| target.iter().position(|t| t == v).expect("target covers vars"))
            .collect();
        let mut out = BTreeMap::new();
        for (m, c) in &self.terms {
            let mut e = vec![0u32; target.len()];
            for (j, &exp) in m.0.iter().enumerate() {
                if exp > 0 {
                    e[idx[j]] = exp;
                }
            }
            out.insert(Monomial(e), c.clone());
        }
        out
    }

    fn union_vars(a: &[String], b: &[String]) -> Vec<String> {
        let mut vars: Vec<String> = a.to_vec();
        for v in b {
            if !vars.contains(v) {
                vars.push(v.clone());
            }
        }
        vars.sort_by(|x, y| var_order(x, y));
        vars
    }

    pub fn add(&self, other: &MultiPoly) -> MultiPoly {
        let vars = Self::union_vars(&self.vars, &other.vars);
        let mut out = MultiPoly { vars: vars.clone(), terms: self.remap(&vars) };
        for (m, c) in other.remap(&vars) {
            out.insert_term(m, c);
        }
        out
    }

    pub fn neg(&self) -> MultiPoly {
        MultiPoly {
            vars: self.vars.clone(),
            terms: self.terms.iter().map(|(m, c)| (m.clone(), -c)).collect(),
        }
    }

    pub fn sub(&self, other: &MultiPoly) -> MultiPoly {
        self.add(&other.neg())
    }

    pub fn scale(&self, c: &BigRational) -> MultiPoly {
        if c.is_zero() {
            return MultiPoly::zero();
        }
        MultiPoly {
            vars: self.vars.clone(),
            terms: self.terms.iter().map(|(m, k)| (m.clone(), k * c)).collect(),
        }
    }

    pub fn scale_int(&self, c: i64) -> MultiPoly {
        self.scale(&BigRational::from_integer(BigInt::from(c)))
    }

    pub fn mul(&self, other: &MultiPoly) -> MultiPoly {
        let vars = Self::union_vars(&self.vars, &other.vars);
        let a = self.remap(&vars);
        let b = other.remap(&vars);
        let mut out = MultiPoly { vars, terms: BTreeMap::new() };
        for (ma, ca) in &a {
            for (mb, cb) in &b {
                let e: Vec<u32> = ma
                    .0
                    .iter()
                    .zip(mb.0.iter())
                    .map(|(x, y)| x.checked_add(*y).expect("exponent overflow"))
                    .collect();
                out.insert_term(Monomial(e), ca * cb);
            }
        }
        out
    }

    pub fn pow(&self, k: u32) -> MultiPoly {
        let mut acc = MultiPoly::one();
        for _ in 0..k {
            acc = acc.mul(self);
        }
        acc
    }

    /// The falling-factorial binomial `C(self, k) = self (self-1) ... / k!`.
    pub fn binomial(&self, k: u64) -> MultiPoly {
        let mut acc = MultiPoly::one();
        for j in 0..k {
            acc = acc.mul(&self.sub(&MultiPoly::constant_int(j as i64)));
        }
        let kfact = crate::partition::factorial(k);
        acc.scale(&BigRational::new(BigInt::one(), kfact))
    }

    /// Drops variables that appear in no term.
    pub fn normalized(&self) -> MultiPoly {
        let used: Vec<usize> = (0..self.vars.len())
            .filter(|&j| self.terms.keys().any(|m| m.0.get(j).copied().unwrap_or(0) > 0))
            .collect();
        let vars: Vec<String> = used.iter().map(|&j| self.vars[j].clone()).collect();
        let terms = self
            .terms
            .iter()
            .map(|(m, c)| {
                let e: Vec<u32> = used.iter().map(|&j| m.0.get(j).copied().unwrap_or(0)).collect();
                (Monomial(e), c.clone())
            })
            .collect();
        MultiPoly { vars, terms }
    }

    /// Semantic equality: identical terms after dropping unused variables.
    pub fn equivalent(&self, other: &MultiPoly) -> bool {
        self.normalized() == other.normalized()
    }

    /// Replaces every variable by a polynomial. The map must cover every
    /// variable that actually occurs.
    pub fn substitute(&self, map: &BTreeMap<String, MultiPoly>) -> Result<MultiPoly> {
        let images: Vec<Option<&MultiPoly>> = self.vars.iter().map(|v| map.get(v)).collect();
        let mut out = MultiPoly::zero();
        for (m, c) in &self.terms {
            let mut term = MultiPoly::constant(c.clone());
            for (j, &exp) in m.0.iter().enumerate() {
                if exp == 0 {
                    continue;
                }
                let image = images[j]
                    .ok_or_else(|| Error::MissingVariable(self.vars[j].clone()))?;
                term = term.mul(&image.pow(exp));
            }
            out = out.add(&term);
        }
        Ok(out)
    }

    /// Renames variables; keys not in the map are left alone. Distinct
    /// variables may collapse onto one.
    pub fn rename(&self, map: &BTreeMap<String, String>) -> MultiPoly {
        let full: BTreeMap<String, MultiPoly> = self
            .vars
            .iter()
            .map(|v| {
                let target = map.get(v).cloned().unwrap_or_else(|| v.clone());
                (v.clone(), MultiPoly::var(&target))
            })
            .collect();
        self.substitute(&full).expect("rename map is total")
    }

    /// Exact evaluation at an integer point per variable.
    pub fn evaluate(&self, assignment: &BTreeMap<String, BigInt>) -> Result<BigRational> {
        let mut values: Vec<BigRational> = Vec::with_capacity(self.vars.len());
        for v in &self.vars {
            let used = self.terms.keys().any(|m| {
                m.0.get(values.len()).copied().unwrap_or(0) > 0
            });
            match assignment.get(v) {
                Some(x) => values.push(BigRational::from_integer(x.clone())),
                None if !used => values.push(BigRational::zero()),
                None => return Err(Error::MissingVariable(v.clone())),
            }
        }
        let mut acc = BigRational::zero();
        for (m, c) in &self.terms {
            let mut t = c.clone();
            for (j, &exp) in m.0.iter().enumerate() {
                for _ in 0..exp {
                    t *= &values[j];
                }
            }
            acc += t;
        }
        Ok(acc)
    }

    /// JSON form: `{"vars": [key...], "terms": [{"c": "num/den", "e": [..]}]}`.
    pub fn to_json(&self) -> Value {
        let p = self.normalized();
        let terms: Vec<Value> = p
            .terms
            .iter()
            .map(|(m, c)| {
                json!({
                    "c": rational_string(c),
                    "e": m.0.clone(),
                })
            })
            .collect();
        json!({ "vars": p.vars, "terms": terms })
    }

    pub fn from_json(v: &Value) -> Result<MultiPoly> {
        let bad = || Error::Invalid("malformed polynomial JSON".into());
        let vars: Vec<String> = v
            .get("vars")
            .and_then(Value::as_array)
            .ok_or_else(bad)?
            .iter()
            .map(|x| x.as_str().map(str::to_string).ok_or_else(bad))
            .collect::<Result<_>>()?;
        let mut out = MultiPoly { vars, terms: BTreeMap::new() };
        for t in v.get("terms").and_then(Value::as_array).ok_or_else(bad)? {
            let c = parse_rational(t.get("c").and_then(Value::as_str).ok_or_else(bad)?)?;
            let e: Vec<u32> = t
                .get("e")
                .and_then(Value::as_array)
                .ok_or_else(bad)?
                .iter()
                .map(|x| x.as_u64().map(|u| u as u32).ok_or_else(bad))
                .collect::<Result<_>>()?;
            if e.len() != out.vars.len() {
                return Err(bad());
            }
            out.insert_term(Monomial(e), c);
        }
        Ok(out)
    }
}

pub fn rational_string(c: &BigRational) -> String {
    if c.denom().is_one() {
        c.numer().to_string()
    } else {
        format!("{}/{}", c.numer(), c.denom())
    }
}

pub fn parse_rational(s: &str) -> Result<BigRational> {
    let bad = || Error::Invalid(format!("bad rational {s:?}"));
    match s.split_once('/') {
        Some((n, d)) => {
            let n: BigInt = n.trim().parse().map_err(|_| bad())?;
            let d: BigInt = d.trim().parse().map_err(|_| bad())?;
            if d.is_zero() {
                return Err(bad());
            }
            Ok(BigRational::new(n, d))
        }
        None => {
            let n: BigInt = s.trim().parse().map_err(|_| bad())?;
            Ok(BigRational::from_integer(n))
        }
    }
}

/// `C(x_key - shift, k)` as a polynomial.
pub fn binomial_poly(key: &str, shift: &BigRational, k: u64) -> MultiPoly {
    MultiPoly::var(key)
        .sub(&MultiPoly::constant(shift.clone()))
        .binomial(k)
}

impl fmt::Display for MultiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        for (m, c) in self.terms.iter().rev() {
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
            let mut factors: Vec<String> = Vec::new();
            if !abs.is_one() || m.degree() == 0 {
                factors.push(rational_string(&abs));
            }
            for (j, &e) in m.0.iter().enumerate() {
                if e == 1 {
                    factors.push(format!("x[{}]", self.vars[j]));
                } else if e > 1 {
                    factors.push(format!("x[{}]^{}", self.vars[j], e));
                }
            }
            write!(f, "{}", factors.join("*"))?;
        }
        Ok(())
    }
}
