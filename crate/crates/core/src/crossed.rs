//! The algebraic crossed product of `L(E,C)` by the grading of a finite-group
//! labeling, and the isomorphism `φ: L(E ×_c G, C ×_c G) → L(E,C) ⋊ G`.
//!
//! A crossed word `(b, h)` stands for `b·χ_h` with every `χ` moved to the
//! right. Covariance gives `χ_h b' = b' χ_{deg(b')⁻¹h}`, hence
//!
//! * `(b,h)(b',h') = [h = deg(b')·h'] (b b', h')`
//! * `(b,h)* = (b*, deg(b)·h)`

use std::collections::BTreeMap;
use std::fmt;
use std::sync::Arc;

use rand::Rng;

use crate::coeff::Coeff;
use crate::construct::{skew_product, SkewProduct};
use crate::error::{Error, Result};
use crate::graph::{GraphPath, Letter, SetId, VertexId};
use crate::group::{FiniteGroup, GroupElement, Labeling};
use crate::leavitt::{format_word, Algebra, Element, ExChoice};
use crate::sample;

/// `L(E,C)` together with a labeling in a finite group.
#[derive(Debug)]
pub struct CrossedProduct {
    alg: Arc<Algebra>,
    label: Labeling,
    group: FiniteGroup,
    lab: Vec<usize>,
}

impl PartialEq for CrossedProduct {
    fn eq(&self, other: &Self) -> bool {
        self.alg == other.alg && self.label == other.label
    }
}

impl CrossedProduct {
    pub fn new(alg: &Arc<Algebra>, label: &Labeling) -> Result<Arc<Self>> {
        let group = FiniteGroup::new(label.group())?;
        let lab = alg
            .graph()
            .edge_ids()
            .map(|e| group.index_of(label.value(e)?))
            .collect::<Result<Vec<_>>>()?;
        Ok(Arc::new(CrossedProduct { alg: alg.clone(), label: label.clone(), group, lab }))
    }

    pub fn algebra(&self) -> &Arc<Algebra> {
        &self.alg
    }

    pub fn group(&self) -> &FiniteGroup {
        &self.group
    }

    pub fn label(&self) -> &Labeling {
        &self.label
    }

    /// `deg(w)` as a group index.
    pub fn degree_index(&self, letters: &[Letter]) -> usize {
        letters.iter().fold(self.group.identity(), |acc, l| {
            let c = self.lab[l.edge.index()];
            self.group.mul(acc, if l.star { self.group.inv(c) } else { c })
        })
    }
}

/// A finite combination of crossed words `(b, h)` with `b` a basis word.
#[derive(Clone)]
pub struct CrossedElement {
    ctx: Arc<CrossedProduct>,
    terms: BTreeMap<(GraphPath, usize), Coeff>,
}

impl PartialEq for CrossedElement {
    fn eq(&self, other: &Self) -> bool {
        (Arc::ptr_eq(&self.ctx, &other.ctx) || *self.ctx == *other.ctx) && self.terms == other.terms
    }
}

impl fmt::Debug for CrossedElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "CrossedElement({self})")
    }
}

impl fmt::Display for CrossedElement {
    /// `c * word | h`, terms joined by ` + `.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let g = self.ctx.alg.graph();
        let mut parts: Vec<String> = self
            .terms
            .iter()
            .map(|((w, h), c)| format!("{c} * {} | {}", format_word(g, w), self.ctx.group.element(*h)))
            .collect();
        parts.sort();
        write!(f, "{}", parts.join(" + "))
    }
}

impl CrossedElement {
    pub fn zero(ctx: &Arc<CrossedProduct>) -> Self {
        CrossedElement { ctx: ctx.clone(), terms: BTreeMap::new() }
    }

    /// `x·χ_h`.
    pub fn from_element(ctx: &Arc<CrossedProduct>, x: &Element, h: &GroupElement) -> Result<Self> {
        if **x.algebra() != *ctx.alg {
            return Err(Error::ContextMismatch);
        }
        let h = ctx.group.index_of(h)?;
        let mut out = Self::zero(ctx);
        for (w, c) in x.terms() {
            out.add_term(w.clone(), h, c);
        }
        Ok(out)
    }

    pub fn context(&self) -> &Arc<CrossedProduct> {
        &self.ctx
    }

    /// Terms as `(word, slot index, coefficient)`.
    pub fn terms(&self) -> impl Iterator<Item = (&GraphPath, usize, &Coeff)> {
        self.terms.iter().map(|((w, h), c)| (w, *h, c))
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    fn add_term(&mut self, w: GraphPath, h: usize, c: &Coeff) {
        if c.is_zero() {
            return;
        }
        let key = (w, h);
        match self.terms.get_mut(&key) {
            Some(v) => {
                *v += c;
                if v.is_zero() {
                    self.terms.remove(&key);
                }
            }
            None => {
                self.terms.insert(key, c.clone());
            }
        }
    }

    pub fn try_add(&self, other: &CrossedElement) -> Result<CrossedElement> {
        if *self.ctx != *other.ctx {
            return Err(Error::ContextMismatch);
        }
        let mut out = self.clone();
        for ((w, h), c) in &other.terms {
            out.add_term(w.clone(), *h, c);
        }
        Ok(out)
    }

    pub fn scale(&self, c: &Coeff) -> CrossedElement {
        let mut out = Self::zero(&self.ctx);
        for ((w, h), d) in &self.terms {
            out.add_term(w.clone(), *h, &(c * d));
        }
        out
    }

    /// Replaces every slot `h` by `h·z⁻¹`; the dual action of `z`.
    pub fn translate_slots(&self, z: usize) -> CrossedElement {
        let grp = &self.ctx.group;
        let zi = grp.inv(z);
        let mut out = Self::zero(&self.ctx);
        for ((w, h), c) in &self.terms {
            out.add_term(w.clone(), grp.mul(*h, zi), c);
        }
        out
    }
}

/// `(b,h)(b',h') = [h = deg(b')h'] (b b', h')`, extended bilinearly.
pub fn crossed_mul(x: &CrossedElement, y: &CrossedElement) -> Result<CrossedElement> {
    if *x.ctx != *y.ctx {
        return Err(Error::ContextMismatch);
    }
    let ctx = &x.ctx;
    let mut out = CrossedElement::zero(ctx);
    for ((u, h), c) in &x.terms {
        for ((w, h2), d) in &y.terms {
            if *h != ctx.group.mul(ctx.degree_index(&w.steps), *h2) {
                continue;
            }
            let prod = Element::monomial(&ctx.alg, u.clone(), c.clone())
                .try_mul(&Element::monomial(&ctx.alg, w.clone(), d.clone()))?;
            for (p, e) in prod.terms() {
                out.add_term(p.clone(), *h2, e);
            }
        }
    }
    Ok(out)
}

/// `(b,h)* = (b*, deg(b)·h)`, conjugate-linear.
pub fn crossed_star(x: &CrossedElement) -> CrossedElement {
    let ctx = &x.ctx;
    let g = ctx.alg.graph();
    let mut out = CrossedElement::zero(ctx);
    for ((w, h), c) in &x.terms {
        out.add_term(w.adjoint(g), ctx.group.mul(ctx.degree_index(&w.steps), *h), &c.conj());
    }
    out
}

/// The images of the generators under `ψ`, as elements of the skew-product algebra.
#[derive(Clone, Debug)]
pub struct PsiTable {
    /// `π(P_v) = Σ_g P_{(v,g)}`, by vertex.
    pub vertices: Vec<Element>,
    /// `π(S_e) = Σ_g S_{(e,g)}`, by edge.
    pub edges: Vec<Element>,
    /// `σ(χ_g) = Σ_v P_{(v,g⁻¹)}`, by group index.
    pub chi: Vec<Element>,
}

/// Outcome of [`CrossedIso::verify`].
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct IsoReport {
    pub generators_checked: usize,
    pub pairs_checked: usize,
    pub equivariance_checked: usize,
    pub failures: Vec<String>,
}

impl IsoReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

impl fmt::Display for IsoReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "generators checked: {}", self.generators_checked)?;
        writeln!(f, "sampled pairs checked: {}", self.pairs_checked)?;
        writeln!(f, "equivariance checks: {}", self.equivariance_checked)?;
        for fail in &self.failures {
            writeln!(f, "FAIL {fail}")?;
        }
        write!(f, "{}", if self.passed() { "PASS" } else { "FAIL" })
    }
}

/// The skew-product algebra, the crossed product and the maps between them.
#[derive(Debug)]
pub struct CrossedIso {
    skew: SkewProduct,
    skew_alg: Arc<Algebra>,
    cp: Arc<CrossedProduct>,
}

impl CrossedIso {
    /// Uses the lifted choice `e_{X_g} = (e_X, g)` on the skew product.
    pub fn new(alg: &Arc<Algebra>, label: &Labeling) -> Result<Self> {
        let skew = skew_product(alg.graph(), label)?;
        let ex = lifted_choice(&skew, alg.ex())?;
        let skew_alg = Algebra::new(skew.graph().clone(), ex)?;
        Ok(CrossedIso { cp: CrossedProduct::new(alg, label)?, skew, skew_alg })
    }

    /// Uses a given algebra on the skew product, which must carry the lifted choice.
    pub fn with_skew_algebra(alg: &Arc<Algebra>, label: &Labeling, skew_alg: &Arc<Algebra>) -> Result<Self> {
        let skew = skew_product(alg.graph(), label)?;
        if skew_alg.graph() != skew.graph() {
            return Err(Error::ContextMismatch);
        }
        let lifted = lifted_choice(&skew, alg.ex())?;
        for (i, _) in skew.graph().sets().iter().enumerate() {
            let s = SetId(i as u32);
            if skew_alg.ex().chosen(s) != lifted.chosen(s) {
                return Err(Error::IncompatibleChoice {
                    edge: skew.graph().edge_name(skew_alg.ex().chosen(s)).to_string(),
                });
            }
        }
        Ok(CrossedIso { cp: CrossedProduct::new(alg, label)?, skew, skew_alg: skew_alg.clone() })
    }

    pub fn skew(&self) -> &SkewProduct {
        &self.skew
    }

    pub fn skew_algebra(&self) -> &Arc<Algebra> {
        &self.skew_alg
    }

    pub fn crossed_product(&self) -> &Arc<CrossedProduct> {
        &self.cp
    }

    /// `φ(S_{(ς,g)}) = (S_ς, (g·c(ς))⁻¹)` on basis words, extended linearly.
    pub fn phi(&self, x: &Element) -> Result<CrossedElement> {
        if **x.algebra() != *self.skew_alg {
            return Err(Error::ContextMismatch);
        }
        let grp = self.skew.group();
        let mut out = CrossedElement::zero(&self.cp);
        for (w, c) in x.terms() {
            let (base, steps, g) = self.skew.project_word(w.base, &w.steps);
            let slot = grp.inv(grp.mul(g, self.skew.degree_index(&steps)));
            out.add_term(GraphPath { base, steps }, slot, c);
        }
        Ok(out)
    }

    /// The inverse of `φ` on basis words: `(ς, h) ↦ S_{(ς, h⁻¹c(ς)⁻¹)}`.
    pub fn phi_inverse(&self, y: &CrossedElement) -> Result<Element> {
        if *y.ctx != *self.cp {
            return Err(Error::ContextMismatch);
        }
        let grp = self.skew.group();
        let mut out = Element::zero(&self.skew_alg);
        for ((w, h), c) in &y.terms {
            let g = grp.inv(grp.mul(self.skew.degree_index(&w.steps), *h));
            let (base, steps) = self.skew.lift_word(w.base, &w.steps, g);
            out.add_term(GraphPath { base, steps }, c);
        }
        Ok(out)
    }

    pub fn psi_generators(&self) -> PsiTable {
        let base = self.cp.alg.graph();
        let n = self.skew.group().len();
        let alg = &self.skew_alg;
        let sum = |items: &mut dyn Iterator<Item = Element>| items.fold(Element::zero(alg), |acc, x| &acc + &x);
        let vertices = base
            .vertex_ids()
            .map(|v| sum(&mut (0..n).map(|g| Element::vertex(alg, self.skew.vertex(v, g)))))
            .collect();
        let edges = base
            .edge_ids()
            .map(|e| sum(&mut (0..n).map(|g| Element::generator(alg, Letter::fwd(self.skew.edge(e, g))))))
            .collect();
        let chi = (0..n)
            .map(|g| {
                let gi = self.skew.group().inv(g);
                sum(&mut base.vertex_ids().map(|v| Element::vertex(alg, self.skew.vertex(v, gi))))
            })
            .collect();
        PsiTable { vertices, edges, chi }
    }

    /// `ψ(b,h) = π(b)·σ(χ_h)`, computed by multiplying generator images.
    pub fn psi(&self, table: &PsiTable, y: &CrossedElement) -> Result<Element> {
        if *y.ctx != *self.cp {
            return Err(Error::ContextMismatch);
        }
        let mut out = Element::zero(&self.skew_alg);
        for ((w, h), c) in &y.terms {
            let mut acc = table.vertices[w.base.index()].clone();
            for l in &w.steps {
                let s = &table.edges[l.edge.index()];
                acc = if l.star { &acc * &s.star() } else { &acc * s };
            }
            acc = &acc * &table.chi[*h];
            out = &out + &acc.scale(c);
        }
        Ok(out)
    }

    /// `γ_z(S_{(ς,g)}) = S_{(ς,zg)}` on the skew-product algebra.
    pub fn translate(&self, z: usize, x: &Element) -> Element {
        let grp = self.skew.group();
        x.map_words(&self.skew_alg, |w| {
            let (v, g) = self.skew.split_vertex(w.base);
            let zg = grp.mul(z, g);
            let base = self.skew.vertex(v, zg);
            let steps = w
                .steps
                .iter()
                .map(|l| {
                    let (e, k) = self.skew.split_edge(l.edge);
                    Letter { edge: self.skew.edge(e, grp.mul(z, k)), star: l.star }
                })
                .collect();
            GraphPath { base, steps }
        })
    }

    /// Checks `ψ∘φ = id` on every generator, multiplicativity and `*` of `φ`
    /// on `samples` random basis pairs, and `φ∘γ_z = (slot map of z)∘φ`.
    pub fn verify<R: Rng>(&self, samples: usize, max_len: usize, rng: &mut R) -> IsoReport {
        let mut report = IsoReport::default();
        let table = self.psi_generators();
        let sg = self.skew.graph();
        let alg = &self.skew_alg;
        let mut generators: Vec<(String, Element)> =
            sg.vertex_ids().map(|v| (format!("@{}", sg.vertex_name(v)), Element::vertex(alg, v))).collect();
        for e in sg.edge_ids() {
            let name = sg.edge_name(e);
            generators.push((name.to_string(), Element::generator(alg, Letter::fwd(e))));
            generators.push((format!("{name}*"), Element::generator(alg, Letter::star(e))));
        }
        let fail = |report: &mut IsoReport, msg: String| report.failures.push(msg);
        for (name, x) in &generators {
            report.generators_checked += 1;
            match self.phi(x).and_then(|y| self.psi(&table, &y)) {
                Ok(back) if &back == x => {}
                Ok(back) => fail(&mut report, format!("psi(phi({name})) = {back}")),
                Err(e) => fail(&mut report, format!("psi(phi({name})): {e}")),
            }
        }
        let mut sampled = Vec::with_capacity(samples);
        for _ in 0..samples {
            let u = Element::monomial(alg, sample::random_normal_word(rng, alg, max_len), Coeff::one());
            let w = Element::monomial(alg, sample::random_normal_word(rng, alg, max_len), Coeff::one());
            report.pairs_checked += 1;
            let check = || -> Result<Option<String>> {
                let (pu, pw) = (self.phi(&u)?, self.phi(&w)?);
                if self.phi(&(&u * &w))? != crossed_mul(&pu, &pw)? {
                    return Ok(Some(format!("phi({u} * {w}) is not phi({u}) phi({w})")));
                }
                if self.phi(&u.star())? != crossed_star(&pu) {
                    return Ok(Some(format!("phi(({u})*) is not phi({u})*")));
                }
                if self.psi(&table, &pu)? != u || self.phi_inverse(&pu)? != u {
                    return Ok(Some(format!("psi(phi({u})) is not {u}")));
                }
                Ok(None)
            };
            match check() {
                Ok(None) => {}
                Ok(Some(msg)) => fail(&mut report, msg),
                Err(e) => fail(&mut report, e.to_string()),
            }
            sampled.push(u);
        }
        for z in 0..self.skew.group().len() {
            for x in generators.iter().map(|(_, x)| x).chain(&sampled) {
                report.equivariance_checked += 1;
                let lhs = self.phi(&self.translate(z, x));
                let rhs = self.phi(x).map(|y| y.translate_slots(z));
                match (lhs, rhs) {
                    (Ok(a), Ok(b)) if a == b => {}
                    _ => fail(
                        &mut report,
                        format!("translation by {} does not match the slot map on {x}", self.skew.group().element(z)),
                    ),
                }
            }
        }
        report
    }
}

fn lifted_choice(skew: &SkewProduct, ex: &ExChoice) -> Result<ExChoice> {
    let sg = skew.graph();
    let base = skew.base();
    let chosen = sg
        .sets()
        .iter()
        .map(|x| {
            let (e, g) = skew.split_edge(x.edges[0]);
            skew.edge(ex.chosen(base.set_of(e)), g)
        })
        .collect();
    ExChoice::from_edges(sg, chosen)
}

/// The crossed word `(P_v, h)` for a slot index `h`.
pub fn vertex_word(ctx: &Arc<CrossedProduct>, v: VertexId, h: usize) -> CrossedElement {
    let mut out = CrossedElement::zero(ctx);
    out.add_term(GraphPath::vertex(v), h, &Coeff::one());
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog;
    use crate::group::GroupSpec;

    fn z(n: u64, k: i64) -> GroupElement {
        GroupSpec::zmod(n).parse_element(&k.to_string()).unwrap()
    }

    fn setup() -> (Arc<Algebra>, CrossedIso) {
        let g = catalog::cuntz(1);
        let alg = Algebra::with_default_choice(g.clone());
        let c = Labeling::from_values(&g, GroupSpec::zmod(2), vec![z(2, 1)]).unwrap();
        let iso = CrossedIso::new(&alg, &c).unwrap();
        (alg, iso)
    }

    #[test]
    fn generator_images() {
        let (alg, iso) = setup();
        let sa = iso.skew_algebra();
        let p = Element::parse(sa, "@v@1").unwrap();
        let x = iso.phi(&p).unwrap();
        let pv = Element::parse(&alg, "@v").unwrap();
        assert_eq!(x, CrossedElement::from_element(iso.crossed_product(), &pv, &z(2, 1)).unwrap());
        let s = Element::parse(sa, "a1@1").unwrap();
        let a = Element::parse(&alg, "a1").unwrap();
        assert_eq!(iso.phi(&s).unwrap(), CrossedElement::from_element(iso.crossed_product(), &a, &z(2, 0)).unwrap());
    }

    #[test]
    fn vertex_slots_multiply_by_delta() {
        let (_, iso) = setup();
        let cp = iso.crossed_product();
        let a = vertex_word(cp, VertexId(0), 0);
        let b = vertex_word(cp, VertexId(0), 1);
        assert!(crossed_mul(&a, &b).unwrap().is_zero());
        assert_eq!(crossed_mul(&a, &a).unwrap(), a);
        assert_eq!(crossed_star(&b), b);
    }

    #[test]
    fn psi_of_vertex_sums_over_the_group() {
        let (_, iso) = setup();
        let t = iso.psi_generators();
        assert_eq!(t.vertices[0], Element::parse(iso.skew_algebra(), "@v@0 + @v@1").unwrap());
        assert!((&t.chi[0] * &t.chi[1]).is_zero());
    }

    #[test]
    fn full_check_on_one_loop() {
        let (_, iso) = setup();
        let report = iso.verify(50, 5, &mut sample::rng(1));
        assert!(report.passed(), "{report}");
    }

    #[test]
    fn other_choices_are_incompatible() {
        let g = catalog::emn(1, 2);
        let alg = Algebra::with_default_choice(g.clone());
        let c = Labeling::from_values(&g, GroupSpec::zmod(2), vec![z(2, 1), z(2, 0), z(2, 1)]).unwrap();
        let skew = skew_product(&g, &c).unwrap();
        let wrong = Algebra::new(skew.graph().clone(), ExChoice::last(skew.graph())).unwrap();
        assert!(matches!(
            CrossedIso::with_skew_algebra(&alg, &c, &wrong),
            Err(Error::IncompatibleChoice { .. })
        ));
    }
}
