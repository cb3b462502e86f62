//! Acyclic quivers, their paths, and the text file format.
//!
//! Vertices are 0-based internally; the file format is 1-based.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use serde::Serialize;

use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct Arrow {
    pub label: String,
    pub source: usize,
    pub target: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct Quiver {
    name: String,
    vertices: usize,
    arrows: Vec<Arrow>,
}

/// A path `source → … → target`; arrows compose left to right, so `[a, b]`
/// means "first `a`, then `b`". The empty path is the idempotent at `source`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct Path {
    pub source: usize,
    pub target: usize,
    pub arrows: Vec<usize>,
}

impl Path {
    pub fn trivial(v: usize) -> Self {
        Path {
            source: v,
            target: v,
            arrows: Vec::new(),
        }
    }

    pub fn len(&self) -> usize {
        self.arrows.len()
    }

    pub fn is_trivial(&self) -> bool {
        self.arrows.is_empty()
    }

    pub fn is_empty(&self) -> bool {
        self.is_trivial()
    }

    /// Concatenation `self · other` when `self` ends where `other` starts.
    pub fn concat(&self, other: &Path) -> Option<Path> {
        (self.target == other.source).then(|| {
            let mut arrows = self.arrows.clone();
            arrows.extend_from_slice(&other.arrows);
            Path {
                source: self.source,
                target: other.target,
                arrows,
            }
        })
    }

    /// `w` with `self = w · suffix`.
    pub fn strip_suffix(&self, suffix: &Path) -> Option<Path> {
        if self.target != suffix.target || !self.arrows.ends_with(&suffix.arrows) {
            return None;
        }
        let cut = self.arrows.len() - suffix.arrows.len();
        Some(Path {
            source: self.source,
            target: suffix.source,
            arrows: self.arrows[..cut].to_vec(),
        })
    }

    /// `w` with `self = prefix · w`.
    pub fn strip_prefix(&self, prefix: &Path) -> Option<Path> {
        if self.source != prefix.source || !self.arrows.starts_with(&prefix.arrows) {
            return None;
        }
        Some(Path {
            source: prefix.target,
            target: self.target,
            arrows: self.arrows[prefix.arrows.len()..].to_vec(),
        })
    }
}

/// Dynkin type of a connected component.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Dynkin {
    A(usize),
    D(usize),
    E(usize),
}

impl Dynkin {
    pub fn positive_roots(self) -> usize {
        match self {
            Dynkin::A(n) => n * (n + 1) / 2,
            Dynkin::D(n) => n * (n - 1),
            Dynkin::E(6) => 36,
            Dynkin::E(7) => 63,
            Dynkin::E(8) => 120,
            Dynkin::E(_) => unreachable!(),
        }
    }
}

impl fmt::Display for Dynkin {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Dynkin::A(n) => write!(f, "A{n}"),
            Dynkin::D(n) => write!(f, "D{n}"),
            Dynkin::E(n) => write!(f, "E{n}"),
        }
    }
}

impl Quiver {
    /// Builds a quiver; rejects bad endpoints, duplicate labels and cycles.
    pub fn new(name: impl Into<String>, vertices: usize, arrows: Vec<Arrow>) -> Result<Self> {
        if vertices == 0 {
            return Err(Error::InvalidQuiver("no vertices".into()));
        }
        let mut labels = BTreeSet::new();
        for a in &arrows {
            if a.source >= vertices {
                return Err(Error::InvalidVertex(a.source + 1));
            }
            if a.target >= vertices {
                return Err(Error::InvalidVertex(a.target + 1));
            }
            if !labels.insert(a.label.clone()) {
                return Err(Error::InvalidQuiver(format!(
                    "duplicate arrow label {:?}",
                    a.label
                )));
            }
        }
        let q = Quiver {
            name: name.into(),
            vertices,
            arrows,
        };
        q.topological_order()?;
        Ok(q)
    }

    /// Linear orientation `1 → 2 → … → n`.
    pub fn linear_a(n: usize) -> Self {
        let arrows = (0..n.saturating_sub(1))
            .map(|i| Arrow {
                label: arrow_label(i),
                source: i,
                target: i + 1,
            })
            .collect();
        Quiver::new(format!("A{n}"), n, arrows).expect("linear quiver is acyclic")
    }

    /// `D_4` with all arrows pointing into the branch vertex 1.
    pub fn d4() -> Self {
        let arrows = vec![
            Arrow {
                label: "a".into(),
                source: 1,
                target: 0,
            },
            Arrow {
                label: "b".into(),
                source: 2,
                target: 0,
            },
            Arrow {
                label: "c".into(),
                source: 3,
                target: 0,
            },
        ];
        Quiver::new("D4", 4, arrows).expect("acyclic")
    }

    pub fn kronecker() -> Self {
        let arrows = vec![
            Arrow {
                label: "a".into(),
                source: 0,
                target: 1,
            },
            Arrow {
                label: "b".into(),
                source: 0,
                target: 1,
            },
        ];
        Quiver::new("K2", 2, arrows).expect("acyclic")
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn vertex_count(&self) -> usize {
        self.vertices
    }

    pub fn arrows(&self) -> &[Arrow] {
        &self.arrows
    }

    fn topological_order(&self) -> Result<Vec<usize>> {
        let mut indeg = vec![0usize; self.vertices];
        for a in &self.arrows {
            indeg[a.target] += 1;
        }
        let mut stack: Vec<usize> = (0..self.vertices).filter(|&v| indeg[v] == 0).collect();
        let mut order = Vec::with_capacity(self.vertices);
        while let Some(v) = stack.pop() {
            order.push(v);
            for a in self.arrows.iter().filter(|a| a.source == v) {
                indeg[a.target] -= 1;
                if indeg[a.target] == 0 {
                    stack.push(a.target);
                }
            }
        }
        if order.len() < self.vertices {
            let v = (0..self.vertices).find(|&v| indeg[v] > 0).unwrap();
            return Err(Error::CyclicQuiver(v + 1));
        }
        Ok(order)
    }

    /// All paths including trivial ones, sorted by (length, source, arrows).
    pub fn enumerate_paths(&self) -> Vec<Path> {
        let mut out: Vec<Path> = (0..self.vertices).map(Path::trivial).collect();
        let mut frontier = out.clone();
        while !frontier.is_empty() {
            let mut next = Vec::new();
            for p in &frontier {
                for (i, a) in self.arrows.iter().enumerate() {
                    if a.source == p.target {
                        let mut arrows = p.arrows.clone();
                        arrows.push(i);
                        next.push(Path {
                            source: p.source,
                            target: a.target,
                            arrows,
                        });
                    }
                }
            }
            next.sort_by(|x, y| (x.source, &x.arrows).cmp(&(y.source, &y.arrows)));
            out.extend(next.iter().cloned());
            frontier = next;
        }
        out
    }

    /// Renders a path with arrow labels, or `e<v>` for idempotents (1-based).
    pub fn path_name(&self, p: &Path) -> String {
        if p.is_trivial() {
            format!("e{}", p.source + 1)
        } else {
            p.arrows
                .iter()
                .map(|&i| self.arrows[i].label.as_str())
                .collect::<Vec<_>>()
                .join("")
        }
    }

    /// Dynkin types of the connected components, or `None` if some component
    /// is not Dynkin (multiple arrows, a cycle in the underlying graph, or a
    /// non-ADE tree).
    pub fn dynkin_components(&self) -> Option<Vec<Dynkin>> {
        let n = self.vertices;
        let mut adj: Vec<BTreeSet<usize>> = vec![BTreeSet::new(); n];
        for a in &self.arrows {
            if a.source == a.target || !adj[a.source].insert(a.target) {
                return None;
            }
            adj[a.target].insert(a.source);
        }
        let mut seen = vec![false; n];
        let mut types = Vec::new();
        for start in 0..n {
            if seen[start] {
                continue;
            }
            let mut comp = vec![start];
            seen[start] = true;
            let mut i = 0;
            while i < comp.len() {
                for &w in &adj[comp[i]] {
                    if !seen[w] {
                        seen[w] = true;
                        comp.push(w);
                    }
                }
                i += 1;
            }
            let edges: usize = comp.iter().map(|&v| adj[v].len()).sum::<usize>() / 2;
            if edges + 1 != comp.len() {
                return None;
            }
            types.push(classify_tree(&comp, &adj)?);
        }
        Some(types)
    }

    pub fn is_dynkin(&self) -> bool {
        self.dynkin_components().is_some()
    }

    /// Parses the `quiver/vertices/arrow` text format.
    pub fn parse(text: &str) -> Result<Self> {
        let mut name = None;
        let mut vertices = None;
        let mut arrows = Vec::new();
        for (i, raw) in text.lines().enumerate() {
            let line = i + 1;
            let content = raw.split('#').next().unwrap_or("").trim();
            if content.is_empty() {
                continue;
            }
            let err = |msg: &str| Error::Parse {
                line,
                msg: msg.to_string(),
            };
            let words: Vec<&str> = content.split_whitespace().collect();
            match words[0] {
                "quiver" => {
                    if name.is_some() || words.len() != 2 {
                        return Err(err("expected `quiver <name>` once"));
                    }
                    name = Some(words[1].to_string());
                }
                "vertices" => {
                    if name.is_none() {
                        return Err(err("`vertices` must follow `quiver <name>`"));
                    }
                    if vertices.is_some() || words.len() != 2 {
                        return Err(err("expected `vertices <n>` once"));
                    }
                    let n: usize = words[1]
                        .parse()
                        .map_err(|_| err("vertex count must be a positive integer"))?;
                    if n == 0 {
                        return Err(err("vertex count must be a positive integer"));
                    }
                    vertices = Some(n);
                }
                "arrow" => {
                    let n = vertices.ok_or_else(|| err("`arrow` before `vertices`"))?;
                    if words.len() != 4 {
                        return Err(err("expected `arrow <label> <src> <tgt>`"));
                    }
                    let parse_v = |s: &str| -> Result<usize> {
                        let v: usize = s.parse().map_err(|_| err(&format!("bad vertex {s:?}")))?;
                        if v == 0 || v > n {
                            return Err(err(&format!("vertex {v} out of range 1..={n}")));
                        }
                        Ok(v - 1)
                    };
                    let source = parse_v(words[2])?;
                    let target = parse_v(words[3])?;
                    if arrows.iter().any(|a: &Arrow| a.label == words[1]) {
                        return Err(err(&format!("duplicate arrow label {:?}", words[1])));
                    }
                    arrows.push(Arrow {
                        label: words[1].to_string(),
                        source,
                        target,
                    });
                }
                other => return Err(err(&format!("unknown directive {other:?}"))),
            }
        }
        let name = name.ok_or(Error::Parse {
            line: 1,
            msg: "missing `quiver <name>`".into(),
        })?;
        let vertices = vertices.ok_or(Error::Parse {
            line: 2,
            msg: "missing `vertices <n>`".into(),
        })?;
        Quiver::new(name, vertices, arrows)
    }

    pub fn to_text(&self) -> String {
        let mut s = format!("quiver {}\nvertices {}\n", self.name, self.vertices);
        for a in &self.arrows {
            s.push_str(&format!(
                "arrow {} {} {}\n",
                a.label,
                a.source + 1,
                a.target + 1
            ));
        }
        s
    }
}

fn arrow_label(i: usize) -> String {
    let letters = b"abcdefghijklmnopqrstuvwxyz";
    if i < letters.len() {
        (letters[i] as char).to_string()
    } else {
        format!("x{i}")
    }
}

fn classify_tree(comp: &[usize], adj: &[BTreeSet<usize>]) -> Option<Dynkin> {
    let n = comp.len();
    let branch: Vec<usize> = comp.iter().copied().filter(|&v| adj[v].len() > 2).collect();
    match branch.len() {
        0 => Some(Dynkin::A(n)),
        1 => {
            let b = branch[0];
            if adj[b].len() != 3 {
                return None;
            }
            let mut arms: Vec<usize> = adj[b]
                .iter()
                .map(|&start| {
                    let (mut prev, mut cur, mut len) = (b, start, 1);
                    loop {
                        let next: Vec<usize> =
                            adj[cur].iter().copied().filter(|&w| w != prev).collect();
                        match next.as_slice() {
                            [] => break len,
                            [w] => {
                                prev = cur;
                                cur = *w;
                                len += 1;
                            }
                            _ => break usize::MAX,
                        }
                    }
                })
                .collect();
            arms.sort_unstable();
            match arms.as_slice() {
                [1, 1, _] => Some(Dynkin::D(n)),
                [1, 2, 2] => Some(Dynkin::E(6)),
                [1, 2, 3] => Some(Dynkin::E(7)),
                [1, 2, 4] => Some(Dynkin::E(8)),
                _ => None,
            }
        }
        _ => None,
    }
}

/// Counts paths between each ordered pair of vertices.
pub fn path_counts(q: &Quiver) -> BTreeMap<(usize, usize), usize> {
    let mut m = BTreeMap::new();
    for p in q.enumerate_paths() {
        *m.entry((p.source, p.target)).or_insert(0) += 1;
    }
    m
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn path_enumeration_examples() {
        let single = Quiver::new("A1", 1, vec![]).unwrap();
        assert_eq!(single.enumerate_paths(), vec![Path::trivial(0)]);

        let a3 = Quiver::linear_a(3);
        let names: Vec<String> = a3
            .enumerate_paths()
            .iter()
            .map(|p| a3.path_name(p))
            .collect();
        assert_eq!(names, ["e1", "e2", "e3", "a", "b", "ab"]);

        assert_eq!(Quiver::kronecker().enumerate_paths().len(), 4);
    }

    #[test]
    fn cycle_is_rejected() {
        let arrows = vec![
            Arrow {
                label: "a".into(),
                source: 0,
                target: 1,
            },
            Arrow {
                label: "b".into(),
                source: 1,
                target: 0,
            },
        ];
        assert!(matches!(
            Quiver::new("C", 2, arrows),
            Err(Error::CyclicQuiver(_))
        ));
    }

    #[test]
    fn parse_roundtrip_and_errors() {
        let q = Quiver::parse("quiver A3\nvertices 3\narrow a 1 2\narrow b 2 3\n").unwrap();
        assert_eq!(q, Quiver::linear_a(3));
        assert_eq!(Quiver::parse(&q.to_text()).unwrap(), q);

        let err = Quiver::parse("quiver X\nvertices 2\narrow a 1\n").unwrap_err();
        assert!(matches!(err, Error::Parse { line: 3, .. }), "{err}");
        let err = Quiver::parse("quiver X\nvertices 2\narrow a 1 7\n").unwrap_err();
        assert!(matches!(err, Error::Parse { line: 3, .. }), "{err}");
        assert!(Quiver::parse("vertices 2\n").is_err());
    }

    #[test]
    fn dynkin_classification() {
        assert_eq!(
            Quiver::linear_a(3).dynkin_components(),
            Some(vec![Dynkin::A(3)])
        );
        assert_eq!(Quiver::d4().dynkin_components(), Some(vec![Dynkin::D(4)]));
        assert_eq!(Quiver::kronecker().dynkin_components(), None);
        assert_eq!(Dynkin::D(4).positive_roots(), 12);
    }

    #[test]
    fn prefix_suffix_stripping() {
        let a3 = Quiver::linear_a(3);
        let ab = Path {
            source: 0,
            target: 2,
            arrows: vec![0, 1],
        };
        let b = Path {
            source: 1,
            target: 2,
            arrows: vec![1],
        };
        let a = Path {
            source: 0,
            target: 1,
            arrows: vec![0],
        };
        assert_eq!(ab.strip_suffix(&b), Some(a.clone()));
        assert_eq!(ab.strip_prefix(&a), Some(b.clone()));
        assert_eq!(ab.strip_suffix(&a), None);
        assert_eq!(a3.path_name(&ab), "ab");
    }
}
