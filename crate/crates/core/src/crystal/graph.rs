use std::collections::{BTreeMap, BTreeSet, VecDeque};
use std::fmt::{self, Write as _};

use serde::Serialize;

use super::operators::lower;
use crate::combinatorics::{insertion_tableau, is_yamanouchi, yamanouchi_tableau, Partition, Tableau, Word};
use crate::error::{Error, Result};

/// Default cap on the number of vertices `n^m` of a word graph.
pub const DEFAULT_VERTEX_CAP: usize = 1 << 20;

/// Colored directed graph of `f̃_i` arrows. Vertices are kept sorted by label;
/// edges are `(source, color, target)` index triples, sorted.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CrystalGraph<L> {
    pub vertices: Vec<L>,
    pub edges: Vec<(usize, u8, usize)>,
}

impl<L: Ord + Clone> CrystalGraph<L> {
    /// Build from labelled arrows, sorting vertices and deduplicating.
    pub fn from_arrows(vertices: impl IntoIterator<Item = L>, arrows: impl IntoIterator<Item = (L, u8, L)>) -> Self {
        let set: BTreeSet<L> = vertices.into_iter().collect();
        let vertices: Vec<L> = set.into_iter().collect();
        let index = |l: &L| vertices.binary_search(l).expect("arrow endpoint is a vertex");
        let mut edges: Vec<(usize, u8, usize)> =
            arrows.into_iter().map(|(s, i, t)| (index(&s), i, index(&t))).collect();
        edges.sort_unstable();
        edges.dedup();
        CrystalGraph { vertices, edges }
    }

    pub fn edge_labels(&self) -> impl Iterator<Item = (&L, u8, &L)> {
        self.edges.iter().map(|&(s, i, t)| (&self.vertices[s], i, &self.vertices[t]))
    }

    /// Vertex index sets of the weakly connected components, each sorted,
    /// listed by smallest member.
    pub fn connected_components(&self) -> Vec<Vec<usize>> {
        let n = self.vertices.len();
        let mut parent: Vec<usize> = (0..n).collect();
        fn find(p: &mut [usize], x: usize) -> usize {
            let mut r = x;
            while p[r] != r {
                r = p[r];
            }
            let mut c = x;
            while p[c] != r {
                let next = p[c];
                p[c] = r;
                c = next;
            }
            r
        }
        for &(s, _, t) in &self.edges {
            let (a, b) = (find(&mut parent, s), find(&mut parent, t));
            if a != b {
                parent[a.max(b)] = a.min(b);
            }
        }
        let mut groups: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
        for v in 0..n {
            let r = find(&mut parent, v);
            groups.entry(r).or_default().push(v);
        }
        groups.into_values().collect()
    }

    pub fn is_connected(&self) -> bool {
        self.connected_components().len() <= 1
    }

    /// Edges of a fixed color form disjoint directed paths: in- and
    /// out-degree at most one per color, and no cycles.
    pub fn colors_form_strings(&self) -> bool {
        let mut out: BTreeMap<(usize, u8), usize> = BTreeMap::new();
        let mut inn: BTreeMap<(usize, u8), usize> = BTreeMap::new();
        for &(s, i, t) in &self.edges {
            if out.insert((s, i), t).is_some() || inn.insert((t, i), s).is_some() {
                return false;
            }
        }
        // every path started at a vertex with no incoming arrow must terminate;
        // a cycle would leave arrows unvisited
        let mut visited = 0;
        for &(s, i) in out.keys() {
            if inn.contains_key(&(s, i)) {
                continue;
            }
            let mut cur = s;
            while let Some(&next) = out.get(&(cur, i)) {
                visited += 1;
                cur = next;
            }
        }
        visited == self.edges.len()
    }
}

impl<L: fmt::Display> CrystalGraph<L> {
    /// Deterministic Graphviz output; colors are carried by the edge label.
    pub fn to_dot(&self) -> String {
        let mut s = String::from("digraph {\n");
        for (k, v) in self.vertices.iter().enumerate() {
            let _ = writeln!(s, "  v{k} [label=\"{v}\"];");
        }
        for &(a, i, b) in &self.edges {
            let _ = writeln!(s, "  v{a} -> v{b} [label=\"{i}\"];");
        }
        s.push('}');
        s.push('\n');
        s
    }
}

impl<L: Serialize> CrystalGraph<L> {
    pub fn to_json(&self) -> serde_json::Value {
        serde_json::json!({ "vertices": self.vertices, "edges": self.edges })
    }
}

/// The crystal graph of the `m`-th tensor power of the basic module: all
/// words of length `m`, with `u -i-> v` iff `f̂_i u = v`.
pub fn word_graph(n: u8, m: usize) -> Result<CrystalGraph<Word>> {
    word_graph_capped(n, m, DEFAULT_VERTEX_CAP)
}

pub fn word_graph_capped(n: u8, m: usize, cap: usize) -> Result<CrystalGraph<Word>> {
    if n == 0 {
        return Err(Error::InvalidInput("alphabet size must be at least 1".into()));
    }
    let size = (n as u128).checked_pow(m as u32).unwrap_or(u128::MAX);
    if size > cap as u128 {
        return Err(Error::ResourceLimit(format!("{n}^{m} vertices exceeds cap {cap}")));
    }
    let vertices: Vec<Word> = Word::all(n, m).collect();
    let arrows: Vec<(Word, u8, Word)> = vertices
        .iter()
        .flat_map(|w| (1..n).filter_map(move |i| lower(w, i).map(|v| (w.clone(), i, v))))
        .collect();
    Ok(CrystalGraph::from_arrows(vertices, arrows))
}

/// The connected component of a Yamanouchi (highest weight) word, with each
/// vertex relabelled by its insertion tableau.
pub fn component(highest: &Word, n: u8) -> Result<CrystalGraph<Tableau>> {
    Ok(relabel_by_insertion(&component_words(highest, n)?))
}

/// Same component, keeping words as labels.
pub fn component_words(highest: &Word, n: u8) -> Result<CrystalGraph<Word>> {
    if !is_yamanouchi(highest) {
        return Err(Error::InvalidInput(format!("seed {highest} is not a Yamanouchi word")));
    }
    if highest.max_letter() > n {
        return Err(Error::LetterOutOfRange { letter: highest.max_letter() as u32, n: n as u32 });
    }
    let mut seen = BTreeSet::from([highest.clone()]);
    let mut queue = VecDeque::from([highest.clone()]);
    let mut arrows = Vec::new();
    while let Some(w) = queue.pop_front() {
        for i in 1..n {
            if let Some(v) = lower(&w, i) {
                arrows.push((w.clone(), i, v.clone()));
                if seen.insert(v.clone()) {
                    queue.push_back(v);
                }
            }
        }
    }
    Ok(CrystalGraph::from_arrows(seen, arrows))
}

/// The component of highest weight `lambda`, seeded by the column reading of
/// the Yamanouchi tableau of that shape.
pub fn component_for_shape(lambda: &Partition, n: u8) -> Result<CrystalGraph<Tableau>> {
    if lambda.len() > n as usize {
        return Err(Error::InvalidInput(format!("{lambda} has more than {n} rows")));
    }
    component(&yamanouchi_tableau(lambda).column_reading(), n)
}

fn relabel_by_insertion(g: &CrystalGraph<Word>) -> CrystalGraph<Tableau> {
    let label = |w: &Word| insertion_tableau(w);
    CrystalGraph::from_arrows(
        g.vertices.iter().map(label),
        g.edge_labels().map(|(s, i, t)| (label(s), i, label(t))),
    )
}

/// Shape of each connected component of a word graph (via the insertion
/// tableau of any member), with multiplicities.
pub fn component_shapes(g: &CrystalGraph<Word>) -> BTreeMap<Partition, usize> {
    let mut counts = BTreeMap::new();
    for comp in g.connected_components() {
        let shape = insertion_tableau(&g.vertices[comp[0]]).shape();
        *counts.entry(shape).or_insert(0) += 1;
    }
    counts
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::combinatorics::{semistandard_tableaux, standard_tableaux};

    fn w(s: &str) -> Word {
        Word::parse(s, 9).unwrap()
    }

    #[test]
    fn small_word_graphs() {
        let g = word_graph(2, 1).unwrap();
        assert_eq!(g.vertices, vec![w("1"), w("2")]);
        assert_eq!(g.edges, vec![(0, 1, 1)]);
        let g = word_graph(2, 2).unwrap();
        assert_eq!(g.vertices.len(), 4);
        let labels: Vec<_> = g.edge_labels().map(|(s, i, t)| (s.to_string(), i, t.to_string())).collect();
        assert_eq!(labels, vec![("11".into(), 1, "12".into()), ("12".into(), 1, "22".into())]);
    }

    #[test]
    fn word_graph_cap() {
        assert!(matches!(word_graph_capped(3, 5, 100), Err(Error::ResourceLimit(_))));
    }

    #[test]
    fn component_sizes_match_tableau_counts() {
        let g = component(&w("211"), 3).unwrap();
        assert_eq!(g.vertices.len(), 8);
        let g = component_for_shape(&Partition::new(vec![2, 2]).unwrap(), 4).unwrap();
        assert_eq!(g.vertices.len(), 20);
        assert!(g.is_connected());
        assert_eq!(g.vertices, semistandard_tableaux(&Partition::new(vec![2, 2]).unwrap(), 4));
        let g = component(&w("1"), 2).unwrap();
        assert_eq!(g.edges.len(), 1);
    }

    #[test]
    fn component_rejects_non_highest_seed() {
        assert!(component(&w("112"), 3).is_err());
    }

    #[test]
    fn component_multiplicities_are_standard_tableau_counts() {
        for m in 0..=4 {
            let g = word_graph(3, m).unwrap();
            let shapes = component_shapes(&g);
            let expected: BTreeMap<Partition, usize> = Partition::all(m, 3)
                .into_iter()
                .filter(|p| m > 0 || p.is_empty())
                .map(|p| {
                    let f = standard_tableaux(&p).len();
                    (p, f)
                })
                .collect();
            assert_eq!(shapes, expected, "m = {m}");
            assert!(g.colors_form_strings());
        }
    }

    #[test]
    fn dot_output() {
        let empty: CrystalGraph<Word> = CrystalGraph { vertices: vec![], edges: vec![] };
        assert_eq!(empty.to_dot(), "digraph {\n}\n");
        let dot = word_graph(2, 2).unwrap().to_dot();
        assert_eq!(dot.matches("[label=\"1\"]").count(), 2);
        assert_eq!(dot.matches("v0 [").count(), 1);
    }
}
