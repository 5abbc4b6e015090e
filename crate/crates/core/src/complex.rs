//! Simplicial complexes given by their minimal nonfaces, with reduced
//! homology over Q.
//!
//! Chain groups are dimension-indexed: `C_s` is spanned by faces of
//! cardinality `s + 1`, and `∂_s: C_s -> C_{s-1}` sends `e_F` to
//! `Σ_{p ∈ F} (-1)^{sgn(p;F)} e_{F∖{p}}` with `sgn(p;F) = |{q ∈ F : q < p}|`.
//! The empty face spans `C_{-1}`.

use std::cmp::Ordering;
use std::collections::{BTreeMap, HashMap};
use std::fmt;

use crate::error::{Error, Result};
use crate::ideal::MonomialIdeal;
use crate::linalg::{self, SparseRow};
use crate::monomial::Monomial;

/// A vertex set, stored as a bitmask over at most 64 vertices.
///
/// Ordered canonically: by cardinality, then lexicographically on the
/// ascending vertex sequence.
#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct Face(pub u64);

impl Face {
    pub fn from_vertices(vs: impl IntoIterator<Item = usize>) -> Face {
        Face(vs.into_iter().fold(0, |m, v| m | (1u64 << v)))
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn contains(self, v: usize) -> bool {
        self.0 >> v & 1 == 1
    }

    pub fn is_subset(self, other: Face) -> bool {
        self.0 & !other.0 == 0
    }

    pub fn vertices(self) -> impl Iterator<Item = usize> {
        let mut m = self.0;
        std::iter::from_fn(move || {
            if m == 0 {
                None
            } else {
                let v = m.trailing_zeros() as usize;
                m &= m - 1;
                Some(v)
            }
        })
    }

    pub fn without(self, v: usize) -> Face {
        Face(self.0 & !(1u64 << v))
    }

    /// `sgn(p; F)`: the number of vertices of `F` below `p`.
    pub fn sign_position(self, p: usize) -> usize {
        (self.0 & ((1u64 << p) - 1)).count_ones() as usize
    }
}

impl Ord for Face {
    fn cmp(&self, other: &Self) -> Ordering {
        self.len()
            .cmp(&other.len())
            .then_with(|| self.vertices().cmp(other.vertices()))
    }
}

impl PartialOrd for Face {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Debug for Face {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let vs: Vec<usize> = self.vertices().map(|v| v + 1).collect();
        write!(f, "{vs:?}")
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SimplicialComplex {
    n: usize,
    /// Inclusion-minimal nonfaces, canonically sorted.
    nonfaces: Vec<Face>,
}

impl SimplicialComplex {
    pub fn from_nonfaces(n: usize, nonfaces: impl IntoIterator<Item = Face>) -> Result<Self> {
        if n > 64 {
            return Err(Error::domain("simplicial complexes support at most 64 vertices"));
        }
        let mut all: Vec<Face> = nonfaces.into_iter().collect();
        if all.iter().any(|f| n < 64 && f.0 >> n != 0) {
            return Err(Error::domain("nonface uses a vertex outside [n]"));
        }
        all.sort();
        all.dedup();
        let mut kept: Vec<Face> = Vec::new();
        for f in all {
            if !kept.iter().any(|k| k.is_subset(f)) {
                kept.push(f);
            }
        }
        Ok(SimplicialComplex { n, nonfaces: kept })
    }

    /// The complex whose Stanley–Reisner ideal is `ideal`.
    pub fn stanley_reisner(ideal: &MonomialIdeal) -> Result<Self> {
        if let Some(bad) = ideal.gens().iter().find(|g| !g.is_squarefree()) {
            return Err(Error::domain(format!(
                "Stanley-Reisner complex needs a squarefree ideal; {bad} is not squarefree"
            )));
        }
        Self::from_nonfaces(
            ideal.n(),
            ideal.gens().iter().map(|g| Face(g.support_mask())),
        )
    }

    /// The Stanley–Reisner ideal `I_Δ`.
    pub fn to_ideal(&self) -> MonomialIdeal {
        MonomialIdeal::new(
            self.n,
            self.nonfaces
                .iter()
                .map(|f| Monomial::squarefree(self.n, f.vertices())),
        )
        .expect("same ring")
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn minimal_nonfaces(&self) -> &[Face] {
        &self.nonfaces
    }

    /// No faces at all, not even the empty one.
    pub fn is_void(&self) -> bool {
        self.nonfaces.first().is_some_and(|f| f.is_empty())
    }

    pub fn is_face(&self, f: Face) -> bool {
        !self.nonfaces.iter().any(|nf| nf.is_subset(f))
    }

    /// Restriction to `w`, relabeled onto `0..|w|` preserving vertex order.
    pub fn restrict(&self, w: Face) -> SimplicialComplex {
        let verts: Vec<usize> = w.vertices().collect();
        let relabel = |f: Face| Face::from_vertices(f.vertices().map(|v| {
            verts.binary_search(&v).expect("vertex of w")
        }));
        let nonfaces: Vec<Face> = self
            .nonfaces
            .iter()
            .filter(|nf| nf.is_subset(w))
            .map(|&nf| relabel(nf))
            .collect();
        SimplicialComplex::from_nonfaces(verts.len(), nonfaces).expect("restriction stays valid")
    }

    /// All faces grouped by cardinality (index = cardinality), each group in
    /// canonical order.
    pub fn faces(&self) -> Vec<Vec<Face>> {
        faces_within(&self.nonfaces, Face(full_mask(self.n)))
    }

    /// Dimension, or `None` for the void complex. `{∅}` has dimension -1.
    pub fn dim(&self) -> Option<isize> {
        if self.is_void() {
            return None;
        }
        Some(self.faces().len() as isize - 2)
    }

    /// Matrix of `∂_s` with rows indexed by the `(s-1)`-faces and columns by
    /// the `s`-faces, both in canonical order. Out-of-range `s` gives an
    /// empty matrix with the corresponding shape.
    pub fn boundary_matrix(&self, s: isize) -> BoundaryMatrix {
        let faces = self.faces();
        let group = |card: isize| -> Vec<Face> {
            if card < 0 {
                return vec![];
            }
            faces.get(card as usize).cloned().unwrap_or_default()
        };
        let cols = group(s + 1);
        let rows = group(s);
        let entries = boundary_entries(&rows, &cols);
        BoundaryMatrix {
            rows,
            cols,
            entries,
        }
    }

    /// `dim_Q H̃_s(Δ)`. The void complex has no homology.
    pub fn reduced_homology_dim(&self, s: isize) -> usize {
        let all = self.reduced_homology();
        usize::try_from(s + 1)
            .ok()
            .and_then(|k| all.get(k).copied())
            .unwrap_or(0)
    }

    /// `dim H̃_s` for `s = -1, 0, ..., dim`, stored at index `s + 1`.
    pub fn reduced_homology(&self) -> Vec<usize> {
        if self.is_void() {
            return vec![];
        }
        reduced_homology_of_faces(&self.faces())
    }
}

pub(crate) fn full_mask(n: usize) -> u64 {
    if n == 64 {
        u64::MAX
    } else {
        (1u64 << n) - 1
    }
}

/// Faces of the complex with the given minimal nonfaces that lie inside `w`,
/// grouped by cardinality. Depth-first extension in increasing vertex order
/// emits each cardinality class in lexicographic order.
pub(crate) fn faces_within(nonfaces: &[Face], w: Face) -> Vec<Vec<Face>> {
    if nonfaces.iter().any(|f| f.is_empty()) {
        return vec![];
    }
    let verts: Vec<usize> = w.vertices().collect();
    let mut containing: Vec<Vec<Face>> = vec![Vec::new(); 64];
    for nf in nonfaces.iter().filter(|nf| nf.is_subset(w)) {
        for v in nf.vertices() {
            containing[v].push(*nf);
        }
    }
    let mut out: Vec<Vec<Face>> = vec![vec![Face(0)]];
    fn rec(
        start: usize,
        face: Face,
        verts: &[usize],
        containing: &[Vec<Face>],
        out: &mut Vec<Vec<Face>>,
    ) {
        for k in start..verts.len() {
            let v = verts[k];
            let next = Face(face.0 | 1 << v);
            if containing[v].iter().any(|nf| nf.is_subset(next)) {
                continue;
            }
            let card = next.len();
            if out.len() <= card {
                out.push(Vec::new());
            }
            out[card].push(next);
            rec(k + 1, next, verts, containing, out);
        }
    }
    rec(0, Face(0), &verts, &containing, &mut out);
    out
}

fn boundary_entries(rows: &[Face], cols: &[Face]) -> Vec<(usize, usize, i64)> {
    let index: HashMap<u64, usize> = rows.iter().enumerate().map(|(k, f)| (f.0, k)).collect();
    let mut entries = Vec::new();
    for (c, f) in cols.iter().enumerate() {
        for p in f.vertices() {
            let sign = if f.sign_position(p) % 2 == 0 { 1 } else { -1 };
            let r = index[&f.without(p).0];
            entries.push((r, c, sign));
        }
    }
    entries
}

/// Columns of `∂_s` as sparse vectors over the `(s-1)`-faces.
fn boundary_columns(rows: &[Face], cols: &[Face]) -> Vec<SparseRow> {
    let index: HashMap<u64, u32> = rows
        .iter()
        .enumerate()
        .map(|(k, f)| (f.0, k as u32))
        .collect();
    cols.iter()
        .map(|f| {
            let mut col: SparseRow = f
                .vertices()
                .map(|p| {
                    let sign = if f.sign_position(p) % 2 == 0 { 1 } else { -1 };
                    (index[&f.without(p).0], sign)
                })
                .collect();
            col.sort_unstable_by_key(|e| e.0);
            col
        })
        .collect()
}

/// Reduced homology dimensions from faces grouped by cardinality.
pub(crate) fn reduced_homology_of_faces(faces: &[Vec<Face>]) -> Vec<usize> {
    // ranks[k] = rank of ∂ from cardinality k to k-1, for k >= 1
    let mut ranks = vec![0usize; faces.len() + 1];
    for k in 1..faces.len() {
        ranks[k] = linalg::rank(boundary_columns(&faces[k - 1], &faces[k]));
    }
    (0..faces.len())
        .map(|card| faces[card].len() - ranks[card] - ranks[card + 1])
        .collect()
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BoundaryMatrix {
    pub rows: Vec<Face>,
    pub cols: Vec<Face>,
    /// `(row, col, ±1)` triples.
    pub entries: Vec<(usize, usize, i64)>,
}

impl BoundaryMatrix {
    pub fn shape(&self) -> (usize, usize) {
        (self.rows.len(), self.cols.len())
    }

    pub fn to_dense(&self) -> Vec<Vec<i64>> {
        let mut m = vec![vec![0; self.cols.len()]; self.rows.len()];
        for &(r, c, v) in &self.entries {
            m[r][c] = v;
        }
        m
    }
}

/// A simplicial chain with integer coefficients on faces of one cardinality.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct Chain {
    pub coefficients: BTreeMap<Face, i64>,
}

impl Chain {
    pub fn add_term(&mut self, face: Face, coeff: i64) {
        let e = self.coefficients.entry(face).or_insert(0);
        *e += coeff;
        if *e == 0 {
            self.coefficients.remove(&face);
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coefficients.is_empty()
    }

    /// Faces in the support all share one cardinality.
    pub fn is_homogeneous(&self) -> bool {
        let mut it = self.coefficients.keys().map(|f| f.len());
        match it.next() {
            None => true,
            Some(c) => it.all(|d| d == c),
        }
    }

    pub fn boundary(&self) -> Chain {
        let mut out = Chain::default();
        for (&f, &c) in &self.coefficients {
            for p in f.vertices() {
                let sign = if f.sign_position(p) % 2 == 0 { 1 } else { -1 };
                out.add_term(f.without(p), sign * c);
            }
        }
        out
    }
}
