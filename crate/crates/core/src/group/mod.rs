//! Concretely represented groups: free groups, ℤ, ℤ/n and finite products.

mod action;
mod finite;
mod label;

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::{ToPrimitive, Zero};
use serde::{Deserialize, Serialize};
use serde_json::Value;

use crate::error::{Error, Result};

pub use action::{gross_tucker, ActionReport, ActionViolation, GraphAction, GrossTucker};
pub use finite::FiniteGroup;
pub use label::Labeling;

#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(tag = "type", rename_all = "lowercase")]
pub enum GroupSpec {
    Free { generators: Vec<String> },
    Z,
    Zmod { n: u64 },
    Product { factors: Vec<GroupSpec> },
}

/// One letter `x` or `x⁻¹` of a free word.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct FreeLetter {
    pub generator: String,
    pub inverse: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum GroupElement {
    /// A reduced word.
    Free(Vec<FreeLetter>),
    Int(BigInt),
    Residue { value: u64, modulus: u64 },
    Tuple(Vec<GroupElement>),
}

impl GroupElement {
    pub fn generator(name: &str) -> Self {
        GroupElement::Free(vec![FreeLetter { generator: name.to_string(), inverse: false }])
    }
}

/// Appends `letter` to a reduced word, cancelling against the last letter.
fn push_reduced(word: &mut Vec<FreeLetter>, letter: FreeLetter) {
    if let Some(last) = word.last() {
        if last.generator == letter.generator && last.inverse != letter.inverse {
            word.pop();
            return;
        }
    }
    word.push(letter);
}

impl GroupSpec {
    pub fn zmod(n: u64) -> Self {
        GroupSpec::Zmod { n }
    }

    pub fn free<S: AsRef<str>>(generators: &[S]) -> Self {
        GroupSpec::Free { generators: generators.iter().map(|s| s.as_ref().to_string()).collect() }
    }

    pub fn identity(&self) -> GroupElement {
        match self {
            GroupSpec::Free { .. } => GroupElement::Free(Vec::new()),
            GroupSpec::Z => GroupElement::Int(BigInt::zero()),
            GroupSpec::Zmod { n } => GroupElement::Residue { value: 0, modulus: *n },
            GroupSpec::Product { factors } => {
                GroupElement::Tuple(factors.iter().map(|f| f.identity()).collect())
            }
        }
    }

    pub fn contains(&self, g: &GroupElement) -> bool {
        match (self, g) {
            (GroupSpec::Free { generators }, GroupElement::Free(w)) => {
                w.iter().all(|l| generators.contains(&l.generator))
                    && w.windows(2).all(|p| {
                        !(p[0].generator == p[1].generator && p[0].inverse != p[1].inverse)
                    })
            }
            (GroupSpec::Z, GroupElement::Int(_)) => true,
            (GroupSpec::Zmod { n }, GroupElement::Residue { value, modulus }) => {
                modulus == n && value < n
            }
            (GroupSpec::Product { factors }, GroupElement::Tuple(parts)) => {
                factors.len() == parts.len()
                    && factors.iter().zip(parts).all(|(f, p)| f.contains(p))
            }
            _ => false,
        }
    }

    fn check(&self, g: &GroupElement) -> Result<()> {
        if self.contains(g) {
            Ok(())
        } else {
            Err(Error::NotInGroup { element: g.to_string(), group: self.to_string() })
        }
    }

    pub fn mul(&self, a: &GroupElement, b: &GroupElement) -> Result<GroupElement> {
        self.check(a)?;
        self.check(b)?;
        Ok(self.mul_unchecked(a, b))
    }

    fn mul_unchecked(&self, a: &GroupElement, b: &GroupElement) -> GroupElement {
        match (self, a, b) {
            (GroupSpec::Free { .. }, GroupElement::Free(x), GroupElement::Free(y)) => {
                let mut w = x.clone();
                for l in y {
                    push_reduced(&mut w, l.clone());
                }
                GroupElement::Free(w)
            }
            (GroupSpec::Z, GroupElement::Int(x), GroupElement::Int(y)) => GroupElement::Int(x + y),
            (GroupSpec::Zmod { n }, GroupElement::Residue { value: x, .. }, GroupElement::Residue { value: y, .. }) => {
                let v = ((*x as u128 + *y as u128) % *n as u128) as u64;
                GroupElement::Residue { value: v, modulus: *n }
            }
            (GroupSpec::Product { factors }, GroupElement::Tuple(x), GroupElement::Tuple(y)) => {
                GroupElement::Tuple(
                    factors.iter().zip(x.iter().zip(y)).map(|(f, (p, q))| f.mul_unchecked(p, q)).collect(),
                )
            }
            _ => unreachable!("operands were type-checked"),
        }
    }

    pub fn inv(&self, a: &GroupElement) -> Result<GroupElement> {
        self.check(a)?;
        Ok(self.inv_unchecked(a))
    }

    fn inv_unchecked(&self, a: &GroupElement) -> GroupElement {
        match (self, a) {
            (GroupSpec::Free { .. }, GroupElement::Free(w)) => GroupElement::Free(
                w.iter()
                    .rev()
                    .map(|l| FreeLetter { generator: l.generator.clone(), inverse: !l.inverse })
                    .collect(),
            ),
            (GroupSpec::Z, GroupElement::Int(x)) => GroupElement::Int(-x),
            (GroupSpec::Zmod { n }, GroupElement::Residue { value, .. }) => GroupElement::Residue {
                value: if *value == 0 { 0 } else { n - value },
                modulus: *n,
            },
            (GroupSpec::Product { factors }, GroupElement::Tuple(x)) => GroupElement::Tuple(
                factors.iter().zip(x).map(|(f, p)| f.inv_unchecked(p)).collect(),
            ),
            _ => unreachable!("operand was type-checked"),
        }
    }

    pub fn order(&self) -> Option<u64> {
        match self {
            GroupSpec::Free { generators } if generators.is_empty() => Some(1),
            GroupSpec::Free { .. } | GroupSpec::Z => None,
            GroupSpec::Zmod { n } => Some(*n),
            GroupSpec::Product { factors } => factors
                .iter()
                .try_fold(1u64, |acc, f| f.order().and_then(|o| acc.checked_mul(o))),
        }
    }

    /// All elements in a fixed order (identity first for the cyclic factors).
    pub fn elements(&self) -> Result<Vec<GroupElement>> {
        match self {
            GroupSpec::Free { generators } if generators.is_empty() => Ok(vec![self.identity()]),
            GroupSpec::Free { .. } | GroupSpec::Z => Err(Error::UnsupportedGroup(self.to_string())),
            GroupSpec::Zmod { n } => {
                if *n == 0 {
                    return Err(Error::UnsupportedGroup(self.to_string()));
                }
                Ok((0..*n).map(|value| GroupElement::Residue { value, modulus: *n }).collect())
            }
            GroupSpec::Product { factors } => {
                let mut out = vec![Vec::new()];
                for f in factors {
                    let elems = f.elements()?;
                    out = out
                        .into_iter()
                        .flat_map(|prefix| {
                            elems.iter().map(move |e| {
                                let mut p = prefix.clone();
                                p.push(e.clone());
                                p
                            })
                        })
                        .collect();
                }
                Ok(out.into_iter().map(GroupElement::Tuple).collect())
            }
        }
    }

    /// Parses the textual element syntax: `3`, `-1`, `a b^-1`, `1` (free identity), `(0,1)`.
    pub fn parse_element(&self, text: &str) -> Result<GroupElement> {
        let err = |m: &str| Error::parse(0, format!("`{text}`: {m} for group {self}"));
        let t = text.trim();
        let g = match self {
            GroupSpec::Free { .. } => {
                let mut w = Vec::new();
                if t != "1" && !t.is_empty() {
                    for tok in t.split(|c: char| c.is_whitespace() || c == '.').filter(|s| !s.is_empty()) {
                        let (gen, exp) = match tok.split_once('^') {
                            Some((g, e)) => (g, e.parse::<i64>().map_err(|_| err("bad exponent"))?),
                            None => (tok, 1),
                        };
                        for _ in 0..exp.unsigned_abs() {
                            push_reduced(&mut w, FreeLetter { generator: gen.to_string(), inverse: exp < 0 });
                        }
                    }
                }
                GroupElement::Free(w)
            }
            GroupSpec::Z => GroupElement::Int(t.parse().map_err(|_| err("expected an integer"))?),
            GroupSpec::Zmod { n } => {
                let v: BigInt = t.parse().map_err(|_| err("expected an integer"))?;
                let m = BigInt::from(*n);
                let r = ((v % &m) + &m) % &m;
                GroupElement::Residue { value: r.to_u64().expect("residue fits"), modulus: *n }
            }
            GroupSpec::Product { factors } => {
                let inner = t
                    .strip_prefix('(')
                    .and_then(|s| s.strip_suffix(')'))
                    .ok_or_else(|| err("expected a parenthesised tuple"))?;
                let parts = split_top_level(inner, ',');
                if parts.len() != factors.len() {
                    return Err(err("wrong number of components"));
                }
                GroupElement::Tuple(
                    factors.iter().zip(parts).map(|(f, p)| f.parse_element(p)).collect::<Result<_>>()?,
                )
            }
        };
        self.check(&g)?;
        Ok(g)
    }

    /// Reads a JSON element literal: a number, a textual string, or an array for products.
    pub fn element_from_json(&self, value: &Value) -> Result<GroupElement> {
        match (self, value) {
            (GroupSpec::Product { factors }, Value::Array(items)) => {
                if items.len() != factors.len() {
                    return Err(Error::parse(0, format!("tuple {value} has wrong arity for {self}")));
                }
                let g = GroupElement::Tuple(
                    factors.iter().zip(items).map(|(f, v)| f.element_from_json(v)).collect::<Result<_>>()?,
                );
                self.check(&g)?;
                Ok(g)
            }
            (_, Value::Number(n)) => self.parse_element(&n.to_string()),
            (_, Value::String(s)) => self.parse_element(s),
            _ => Err(Error::parse(0, format!("cannot read {value} as an element of {self}"))),
        }
    }

    pub fn element_to_json(&self, g: &GroupElement) -> Value {
        match g {
            GroupElement::Int(n) => match n.to_i64() {
                Some(i) => Value::from(i),
                None => Value::from(n.to_string()),
            },
            GroupElement::Residue { value, .. } => Value::from(*value),
            GroupElement::Free(_) => Value::from(g.to_string()),
            GroupElement::Tuple(parts) => match self {
                GroupSpec::Product { factors } => {
                    Value::Array(factors.iter().zip(parts).map(|(f, p)| f.element_to_json(p)).collect())
                }
                _ => Value::from(g.to_string()),
            },
        }
    }
}

fn split_top_level(s: &str, sep: char) -> Vec<&str> {
    let mut parts = Vec::new();
    let mut depth = 0i32;
    let mut start = 0;
    for (i, c) in s.char_indices() {
        match c {
            '(' => depth += 1,
            ')' => depth -= 1,
            c if c == sep && depth == 0 => {
                parts.push(&s[start..i]);
                start = i + c.len_utf8();
            }
            _ => {}
        }
    }
    parts.push(&s[start..]);
    parts
}

impl fmt::Display for GroupElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GroupElement::Free(w) if w.is_empty() => write!(f, "1"),
            GroupElement::Free(w) => {
                let parts: Vec<String> = w
                    .iter()
                    .map(|l| if l.inverse { format!("{}^-1", l.generator) } else { l.generator.clone() })
                    .collect();
                write!(f, "{}", parts.join(" "))
            }
            GroupElement::Int(n) => write!(f, "{n}"),
            GroupElement::Residue { value, .. } => write!(f, "{value}"),
            GroupElement::Tuple(parts) => {
                let parts: Vec<String> = parts.iter().map(|p| p.to_string()).collect();
                write!(f, "({})", parts.join(","))
            }
        }
    }
}

impl fmt::Display for GroupSpec {
    /// Shorthand form, inverse of [`FromStr`]: `z`, `zmod:3`, `free:a,b`, `product(zmod:2,zmod:2)`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GroupSpec::Free { generators } => write!(f, "free:{}", generators.join(",")),
            GroupSpec::Z => write!(f, "z"),
            GroupSpec::Zmod { n } => write!(f, "zmod:{n}"),
            GroupSpec::Product { factors } => {
                let parts: Vec<String> = factors.iter().map(|x| x.to_string()).collect();
                write!(f, "product({})", parts.join(","))
            }
        }
    }
}

impl FromStr for GroupSpec {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let t = s.trim();
        if t.starts_with('{') {
            return Ok(serde_json::from_str(t)?);
        }
        if t == "z" {
            return Ok(GroupSpec::Z);
        }
        if let Some(n) = t.strip_prefix("zmod:") {
            let n: u64 = n.parse().map_err(|_| Error::parse(5, format!("bad modulus in `{t}`")))?;
            if n == 0 {
                return Err(Error::parse(5, "modulus must be positive"));
            }
            return Ok(GroupSpec::Zmod { n });
        }
        if let Some(gens) = t.strip_prefix("free:") {
            let generators = gens.split(',').map(str::trim).filter(|g| !g.is_empty()).map(String::from).collect();
            return Ok(GroupSpec::Free { generators });
        }
        if let Some(inner) = t.strip_prefix("product(").and_then(|x| x.strip_suffix(')')) {
            let factors = split_top_level(inner, ',')
                .into_iter()
                .map(str::parse)
                .collect::<Result<Vec<GroupSpec>>>()?;
            return Ok(GroupSpec::Product { factors });
        }
        Err(Error::parse(0, format!("unknown group `{t}`")))
    }
}
