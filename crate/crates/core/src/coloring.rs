use std::collections::BTreeSet;
use std::fmt;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::hypergraph::DirectedHypergraph;

/// A color index. The first four carry the names used by the constructive
/// algorithms.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(transparent)]
pub struct Color(pub u8);

impl Color {
    pub const BLUE: Color = Color(0);
    pub const RED: Color = Color(1);
    pub const GREEN: Color = Color(2);
    pub const YELLOW: Color = Color(3);

    pub fn index(self) -> usize {
        self.0 as usize
    }

    pub fn label(self) -> Option<&'static str> {
        match self.0 {
            0 => Some("blue"),
            1 => Some("red"),
            2 => Some("green"),
            3 => Some("yellow"),
            _ => None,
        }
    }
}

impl fmt::Display for Color {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

/// A total assignment of colors `0..k` to the vertex sequence of a
/// hypergraph.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Coloring {
    colors: Vec<Color>,
    k: usize,
}

impl Coloring {
    pub fn new(colors: Vec<Color>, k: usize) -> Result<Self> {
        if k == 0 {
            return Err(Error::NoColors);
        }
        if let Some(c) = colors.iter().find(|c| c.index() >= k) {
            return Err(Error::ColorRange { color: c.index(), k });
        }
        Ok(Coloring { colors, k })
    }

    pub fn uniform(n: usize, k: usize) -> Self {
        Coloring {
            colors: vec![Color::BLUE; n],
            k: k.max(1),
        }
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn len(&self) -> usize {
        self.colors.len()
    }

    pub fn is_empty(&self) -> bool {
        self.colors.is_empty()
    }

    pub fn get(&self, v: usize) -> Color {
        self.colors[v]
    }

    pub fn colors(&self) -> &[Color] {
        &self.colors
    }

    /// Number of distinct colors actually assigned.
    pub fn colors_used(&self) -> usize {
        self.colors.iter().collect::<BTreeSet<_>>().len()
    }

    /// Indices of edges whose vertices all share one color.
    pub fn monochromatic_edges(&self, h: &DirectedHypergraph) -> Result<Vec<usize>> {
        self.check_size(h)?;
        Ok(h.edges()
            .iter()
            .enumerate()
            .filter(|(_, e)| {
                let vs = e.vertices();
                let first = self.colors[vs[0]];
                vs.iter().all(|&v| self.colors[v] == first)
            })
            .map(|(i, _)| i)
            .collect())
    }

    fn check_size(&self, h: &DirectedHypergraph) -> Result<()> {
        if self.colors.len() != h.vertex_count() {
            return Err(Error::ColoringSize {
                expected: h.vertex_count(),
                found: self.colors.len(),
            });
        }
        Ok(())
    }

    /// `<name> <color>` per vertex, in vertex order.
    pub fn to_text(&self, h: &DirectedHypergraph) -> Result<String> {
        self.check_size(h)?;
        let mut out = String::new();
        for (v, c) in self.colors.iter().enumerate() {
            out.push_str(h.name(v));
            out.push(' ');
            out.push_str(&c.to_string());
            out.push('\n');
        }
        Ok(out)
    }

    /// Reads the coloring file format against `h`. `k` is one more than the
    /// largest color found.
    pub fn from_text(h: &DirectedHypergraph, text: &str) -> Result<Self> {
        let mut colors: Vec<Option<Color>> = vec![None; h.vertex_count()];
        for (lineno, raw) in text.lines().enumerate() {
            let line = raw.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let parse_err = |message: String| Error::Parse {
                line: lineno + 1,
                message,
            };
            let mut tokens = line.split_whitespace();
            let (Some(name), Some(color), None) = (tokens.next(), tokens.next(), tokens.next())
            else {
                return Err(parse_err("expected `<name> <color>`".into()));
            };
            let v = h
                .index_of(name)
                .ok_or_else(|| parse_err(format!("unknown vertex {name:?}")))?;
            let c: u8 = color
                .parse()
                .map_err(|_| parse_err(format!("bad color {color:?}")))?;
            if colors[v].replace(Color(c)).is_some() {
                return Err(parse_err(format!("vertex {name:?} colored twice")));
            }
        }
        let colors = colors
            .into_iter()
            .enumerate()
            .map(|(v, c)| c.ok_or_else(|| Error::Unassigned(h.name(v).to_string())))
            .collect::<Result<Vec<_>>>()?;
        let k = colors.iter().map(|c| c.index() + 1).max().unwrap_or(1);
        Coloring::new(colors, k)
    }
}

/// True iff no edge of `h` is monochromatic under `c`. Roles play no part.
pub fn is_proper(h: &DirectedHypergraph, c: &Coloring) -> Result<bool> {
    c.check_size(h)?;
    Ok(h.edges().iter().all(|e| {
        let vs = e.vertices();
        let first = c.get(vs[0]);
        vs.iter().any(|&v| c.get(v) != first)
    }))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn abc() -> DirectedHypergraph {
        let mut h = DirectedHypergraph::new();
        h.add_edge_named(&["a", "b"], &["c"]).unwrap();
        h
    }

    fn col(cs: &[u8], k: usize) -> Coloring {
        Coloring::new(cs.iter().map(|&c| Color(c)).collect(), k).unwrap()
    }

    #[test]
    fn single_edge_properness() {
        let h = abc();
        assert!(is_proper(&h, &col(&[0, 0, 1], 2)).unwrap());
        assert!(!is_proper(&h, &col(&[0, 0, 0], 2)).unwrap());
        assert_eq!(col(&[0, 0, 0], 2).monochromatic_edges(&h).unwrap(), vec![0]);
    }

    #[test]
    fn short_coloring_is_an_error() {
        let h = abc();
        assert_eq!(
            is_proper(&h, &col(&[0, 1], 2)),
            Err(Error::ColoringSize { expected: 3, found: 2 })
        );
    }

    #[test]
    fn out_of_range_color_rejected() {
        assert_eq!(
            Coloring::new(vec![Color(2)], 2),
            Err(Error::ColorRange { color: 2, k: 2 })
        );
        assert_eq!(Coloring::new(vec![], 0), Err(Error::NoColors));
    }

    #[test]
    fn text_round_trip() {
        let h = abc();
        let c = col(&[1, 0, 1], 2);
        let text = c.to_text(&h).unwrap();
        assert_eq!(text, "a 1\nb 0\nc 1\n");
        assert_eq!(Coloring::from_text(&h, &text).unwrap(), c);
    }

    #[test]
    fn missing_vertex_in_file() {
        let h = abc();
        assert_eq!(
            Coloring::from_text(&h, "a 0\nb 1\n"),
            Err(Error::Unassigned("c".into()))
        );
        assert!(Coloring::from_text(&h, "a 0\nb 1\nc 0\nzz 1\n").is_err());
    }
}
