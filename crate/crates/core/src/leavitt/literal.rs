//! The element literal syntax: `3/2 * e f* - i * @v + e1`.
//!
//! Tokens are whitespace separated. `e` is `S_e`, `e*` is `S_e*` and `@v` is
//! `P_v`. A standalone `+` or `-` separates terms and a standalone `*` separates
//! a coefficient from its word. A lone `0` is the zero element.

use std::fmt;
use std::sync::Arc;

use super::{Algebra, Element, Strategy};
use crate::coeff::Coeff;
use crate::error::{Error, Result};
use crate::graph::{GraphPath, Letter, SeparatedGraph, VertexId};

/// `@v` for a vertex word, otherwise the letters separated by spaces.
pub fn format_word(graph: &SeparatedGraph, w: &GraphPath) -> String {
    if w.is_empty() {
        return format!("@{}", graph.vertex_name(w.base));
    }
    let parts: Vec<String> = w
        .steps
        .iter()
        .map(|l| if l.star { format!("{}*", graph.edge_name(l.edge)) } else { graph.edge_name(l.edge).to_string() })
        .collect();
    parts.join(" ")
}

/// Tokens with their 1-based starting column.
fn tokenize(text: &str) -> Vec<(usize, &str)> {
    let mut out = Vec::new();
    let mut start = None;
    for (i, ch) in text.char_indices() {
        match (ch.is_whitespace(), start) {
            (true, Some(s)) => {
                out.push((s, &text[s..i]));
                start = None;
            }
            (false, None) => start = Some(i),
            _ => {}
        }
    }
    if let Some(s) = start {
        out.push((s, &text[s..]));
    }
    out.into_iter().map(|(s, t)| (text[..s].chars().count() + 1, t)).collect()
}

/// Reads a product of generators; `None` when it is not composable.
fn parse_word(graph: &SeparatedGraph, tokens: &[(usize, &str)]) -> Result<Option<GraphPath>> {
    let mut base: Option<VertexId> = None;
    let mut at: Option<VertexId> = None;
    let mut steps = Vec::new();
    let mut composable = true;
    for &(col, tok) in tokens {
        let (src, dst, letter) = if let Some(v) = tok.strip_prefix('@') {
            let v = graph.vertex(v).map_err(|_| Error::parse(col, format!("unknown vertex `{v}`")))?;
            (v, v, None)
        } else {
            let (name, star) = match tok.strip_suffix('*') {
                Some(n) => (n, true),
                None => (tok, false),
            };
            let e = graph.edge(name).map_err(|_| Error::parse(col, format!("unknown edge `{name}`")))?;
            let l = Letter { edge: e, star };
            (graph.letter_src(l), graph.letter_dst(l), Some(l))
        };
        if at.is_some_and(|u| u != src) {
            composable = false;
        }
        base.get_or_insert(src);
        at = Some(dst);
        steps.extend(letter);
    }
    let base = base.expect("words are nonempty");
    Ok(composable.then_some(GraphPath { base, steps }))
}

impl Element {
    /// Parses the literal syntax; the result is in normal form.
    pub fn parse(alg: &Arc<Algebra>, text: &str) -> Result<Element> {
        let tokens = tokenize(text);
        if tokens.is_empty() {
            return Err(Error::parse(1, "empty element"));
        }
        let mut out = Element::zero(alg);
        if tokens.len() == 1 && tokens[0].1 == "0" {
            return Ok(out);
        }
        let mut i = 0;
        let mut sign = Coeff::one();
        if matches!(tokens[0].1, "+" | "-") {
            if tokens[0].1 == "-" {
                sign = -sign;
            }
            i = 1;
        }
        loop {
            let end = tokens[i..].iter().position(|t| matches!(t.1, "+" | "-")).map_or(tokens.len(), |p| i + p);
            let term = &tokens[i..end];
            let col = tokens.get(i).map_or_else(|| tokens[i - 1].0, |t| t.0);
            if term.is_empty() {
                return Err(Error::parse(col, "missing term"));
            }
            let (coeff, word) = match term.iter().position(|t| t.1 == "*") {
                Some(1) => {
                    let c: Coeff = term[0].1.parse().map_err(|e| Error::parse(term[0].0, format!("{e}")))?;
                    (c, &term[2..])
                }
                Some(p) => return Err(Error::parse(term[p].0, "a coefficient is a single token before `*`")),
                None => (Coeff::one(), term),
            };
            if word.is_empty() {
                return Err(Error::parse(col, "missing word after `*`"));
            }
            if let Some(w) = parse_word(alg.graph(), word)? {
                out.add_reduced(&w, &(&sign * &coeff), Strategy::Leftmost);
            }
            if end == tokens.len() {
                break;
            }
            sign = if tokens[end].1 == "-" { -Coeff::one() } else { Coeff::one() };
            i = end + 1;
            if i == tokens.len() {
                return Err(Error::parse(tokens[end].0, "dangling sign"));
            }
        }
        Ok(out)
    }
}

impl fmt::Display for Element {
    /// Terms are sorted by their serialized word.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let g = self.algebra().graph();
        let mut terms: Vec<(String, &Coeff)> = self.terms().map(|(w, c)| (format_word(g, w), c)).collect();
        if terms.is_empty() {
            return write!(f, "0");
        }
        terms.sort();
        for (i, (w, c)) in terms.into_iter().enumerate() {
            let negative = c.is_real() && c.re() < &num_rational::BigRational::default();
            match (i, negative) {
                (0, _) => write!(f, "{c} * {w}")?,
                (_, true) => write!(f, " - {} * {w}", -c)?,
                (_, false) => write!(f, " + {c} * {w}")?,
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog;

    #[test]
    fn cancel_prints_the_range_vertex() {
        let alg = Algebra::with_default_choice(catalog::emn(1, 2));
        assert_eq!(Element::parse(&alg, "e2* e2").unwrap().to_string(), "1 * @w");
    }

    #[test]
    fn expansion_prints_sorted() {
        let alg = Algebra::with_default_choice(catalog::emn(1, 2));
        assert_eq!(Element::parse(&alg, "e1 e1*").unwrap().to_string(), "1 * @v - 1 * e2 e2*");
    }

    #[test]
    fn round_trip() {
        let alg = Algebra::with_default_choice(catalog::two_set_loops(2, 2));
        for text in ["0", "1 * @v", "3/2+1/2i * e2 f1* - 1/3 * e1 + -i * f2*"] {
            let x = Element::parse(&alg, text).unwrap();
            assert_eq!(Element::parse(&alg, &x.to_string()).unwrap(), x);
        }
    }

    #[test]
    fn non_composable_words_vanish() {
        let alg = Algebra::with_default_choice(catalog::emn(1, 2));
        assert!(Element::parse(&alg, "e1 e2").unwrap().is_zero());
        assert!(Element::parse(&alg, "@v @w").unwrap().is_zero());
    }

    #[test]
    fn errors_carry_columns() {
        let alg = Algebra::with_default_choice(catalog::cuntz(2));
        match Element::parse(&alg, "a1 + zz") {
            Err(Error::Parse { column, .. }) => assert_eq!(column, 6),
            other => panic!("{other:?}"),
        }
        assert!(Element::parse(&alg, "a1 +").is_err());
        assert!(Element::parse(&alg, "2 *").is_err());
        assert!(Element::parse(&alg, "x/y * a1").is_err());
    }
}
