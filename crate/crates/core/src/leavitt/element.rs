use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::Arc;

use num_bigint::BigInt;

use super::{Algebra, Strategy};
use crate::coeff::Coeff;
use crate::error::{Error, Result};
use crate::graph::{GraphPath, Letter, VertexId};

/// An element of `L(E,C)`: normal words with nonzero Gaussian-rational coefficients.
///
/// The arithmetic operators panic when the operands live in different
/// algebras; the `try_*` methods report [`Error::ContextMismatch`] instead.
#[derive(Clone)]
pub struct Element {
    alg: Arc<Algebra>,
    terms: BTreeMap<GraphPath, Coeff>,
}

impl PartialEq for Element {
    fn eq(&self, other: &Self) -> bool {
        self.same_context(other) && self.terms == other.terms
    }
}

impl Eq for Element {}

impl fmt::Debug for Element {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Element({self})")
    }
}

impl Element {
    pub fn zero(alg: &Arc<Algebra>) -> Self {
        Element { alg: alg.clone(), terms: BTreeMap::new() }
    }

    /// `P_v`.
    pub fn vertex(alg: &Arc<Algebra>, v: VertexId) -> Self {
        Self::monomial(alg, GraphPath::vertex(v), Coeff::one())
    }

    /// `S_e` or `S_e*`.
    pub fn generator(alg: &Arc<Algebra>, l: Letter) -> Self {
        alg.reduce(alg.graph().letter_src(l), &[l])
    }

    /// `S_w` for an arbitrary path, reduced to normal form.
    pub fn path(alg: &Arc<Algebra>, w: &GraphPath) -> Self {
        alg.reduce(w.base, &w.steps)
    }

    /// `c·S_w` for a word already known to be normal.
    pub(crate) fn monomial(alg: &Arc<Algebra>, w: GraphPath, c: Coeff) -> Self {
        debug_assert!(alg.is_normal(&w));
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(w, c);
        }
        Element { alg: alg.clone(), terms }
    }

    pub(crate) fn from_integer_terms<'a>(
        alg: &Arc<Algebra>,
        terms: impl Iterator<Item = &'a (GraphPath, BigInt)>,
        scale: &Coeff,
    ) -> Self {
        let mut out = Element::zero(alg);
        for (w, n) in terms {
            out.add_term(w.clone(), &(scale * &Coeff::from_bigint(n.clone())));
        }
        out
    }

    pub fn algebra(&self) -> &Arc<Algebra> {
        &self.alg
    }

    pub fn terms(&self) -> impl Iterator<Item = (&GraphPath, &Coeff)> {
        self.terms.iter()
    }

    /// Number of basis words with a nonzero coefficient.
    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, w: &GraphPath) -> Coeff {
        self.terms.get(w).cloned().unwrap_or_default()
    }

    /// True iff every term is a vertex projection.
    pub fn is_vertex_supported(&self) -> bool {
        self.terms.keys().all(GraphPath::is_empty)
    }

    fn same_context(&self, other: &Element) -> bool {
        Arc::ptr_eq(&self.alg, &other.alg) || *self.alg == *other.alg
    }

    fn check_context(&self, other: &Element) -> Result<()> {
        if self.same_context(other) {
            Ok(())
        } else {
            Err(Error::ContextMismatch)
        }
    }

    pub(crate) fn add_term(&mut self, w: GraphPath, c: &Coeff) {
        if c.is_zero() {
            return;
        }
        let entry = self.terms.entry(w);
        match entry {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c.clone());
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    /// Adds `c·S_w` for any composable word `w`, reducing it first.
    pub(crate) fn add_reduced(&mut self, w: &GraphPath, c: &Coeff, strategy: Strategy) {
        for (u, n) in self.alg.normal_form(w, strategy).iter() {
            self.add_term(u.clone(), &(c * &Coeff::from_bigint(n.clone())));
        }
    }

    pub fn try_add(&self, other: &Element) -> Result<Element> {
        self.check_context(other)?;
        let mut out = self.clone();
        for (w, c) in &other.terms {
            out.add_term(w.clone(), c);
        }
        Ok(out)
    }

    pub fn try_sub(&self, other: &Element) -> Result<Element> {
        self.try_add(&-other)
    }

    pub fn scale(&self, c: &Coeff) -> Element {
        let mut out = Element::zero(&self.alg);
        for (w, d) in &self.terms {
            out.add_term(w.clone(), &(c * d));
        }
        out
    }

    /// Concatenates words pairwise and reduces the result.
    pub fn try_mul(&self, other: &Element) -> Result<Element> {
        self.try_mul_with(other, Strategy::Leftmost)
    }

    pub fn try_mul_with(&self, other: &Element, strategy: Strategy) -> Result<Element> {
        self.check_context(other)?;
        let g = self.alg.graph();
        let mut out = Element::zero(&self.alg);
        for (u, c) in &self.terms {
            let at = u.range(g);
            for (w, d) in &other.terms {
                if w.base != at {
                    continue;
                }
                let mut steps = u.steps.clone();
                steps.extend_from_slice(&w.steps);
                out.add_reduced(&GraphPath { base: u.base, steps }, &(c * d), strategy);
            }
        }
        Ok(out)
    }

    /// Reverses words, swaps orientations and conjugates coefficients.
    /// Adjoints of normal words are normal.
    pub fn star(&self) -> Element {
        let g = self.alg.graph();
        let mut out = Element::zero(&self.alg);
        for (w, c) in &self.terms {
            out.add_term(w.adjoint(g), &c.conj());
        }
        out
    }

    /// Rewrites every term in another algebra over the same graph.
    pub fn rebase(&self, alg: &Arc<Algebra>) -> Result<Element> {
        if self.alg.graph() != alg.graph() {
            return Err(Error::ContextMismatch);
        }
        let mut out = Element::zero(alg);
        for (w, c) in &self.terms {
            out.add_reduced(w, c, Strategy::Leftmost);
        }
        Ok(out)
    }

    /// Keeps the terms accepted by `keep`.
    pub fn filter(&self, mut keep: impl FnMut(&GraphPath) -> bool) -> Element {
        Element {
            alg: self.alg.clone(),
            terms: self.terms.iter().filter(|(w, _)| keep(w)).map(|(w, c)| (w.clone(), c.clone())).collect(),
        }
    }

    /// Rewrites every word by `f` (which must keep words composable) and reduces.
    pub fn map_words(&self, alg: &Arc<Algebra>, mut f: impl FnMut(&GraphPath) -> GraphPath) -> Element {
        let mut out = Element::zero(alg);
        for (w, c) in &self.terms {
            out.add_reduced(&f(w), c, Strategy::Leftmost);
        }
        out
    }
}

impl Add for &Element {
    type Output = Element;
    fn add(self, rhs: &Element) -> Element {
        self.try_add(rhs).expect("elements of one algebra")
    }
}

impl Sub for &Element {
    type Output = Element;
    fn sub(self, rhs: &Element) -> Element {
        self.try_sub(rhs).expect("elements of one algebra")
    }
}

impl Mul for &Element {
    type Output = Element;
    fn mul(self, rhs: &Element) -> Element {
        self.try_mul(rhs).expect("elements of one algebra")
    }
}

impl Neg for &Element {
    type Output = Element;
    fn neg(self) -> Element {
        self.scale(&-Coeff::one())
    }
}
