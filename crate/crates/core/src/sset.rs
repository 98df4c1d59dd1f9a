//! Truncated simplicial sets with full face/degeneracy tables.
//!
//! Every object is stored exactly up to a fixed dimension `trunc`, including
//! all degenerate simplices. Operations never mix truncation levels: callers
//! get an error instead of a silent re-truncation.

use std::collections::BTreeMap;
use std::fmt;
use std::sync::Arc;

use thiserror::Error;

/// Index of a simplex within its level.
pub type SimplexIx = u32;

#[derive(Debug, Error)]
pub enum SsetError {
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
    #[error("truncation mismatch: {left} vs {right}")]
    TruncationMismatch { left: usize, right: usize },
    #[error("maps do not share a codomain")]
    CodomainMismatch,
    #[error("simplicial identity violated: {0}")]
    CorruptInput(String),
    #[error("map does not commute with operators: {0}")]
    NotSimplicial(String),
}

/// A simplex named by its level and index.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub struct SimplexAddress {
    pub level: usize,
    pub index: SimplexIx,
}

impl fmt::Display for SimplexAddress {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}#{}", self.level, self.index)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub(crate) struct LevelData {
    pub names: Vec<String>,
    /// `faces[i][x]` is d_i(x), landing one level down. Empty at level 0.
    pub faces: Vec<Vec<SimplexIx>>,
    /// `degens[i][x]` is s_i(x), landing one level up. Empty at the top level.
    pub degens: Vec<Vec<SimplexIx>>,
}

/// A simplicial set truncated at a fixed level, with all operator tables
/// materialized. Immutable after construction.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TruncatedSSet {
    trunc: usize,
    levels: Vec<LevelData>,
}

/// Shared handle used throughout the crate.
pub type SSetHandle = Arc<TruncatedSSet>;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum StandardKind {
    Simplex,
    Boundary,
    Horn,
}

impl TruncatedSSet {
    pub(crate) fn from_levels(trunc: usize, levels: Vec<LevelData>) -> Result<Self, SsetError> {
        let s = TruncatedSSet { trunc, levels };
        s.validate()?;
        Ok(s)
    }

    /// Builds an object from raw tables, validating every simplicial identity.
    #[allow(clippy::type_complexity)]
    pub fn from_tables(
        trunc: usize,
        names: Vec<Vec<String>>,
        faces: Vec<Vec<Vec<SimplexIx>>>,
        degens: Vec<Vec<Vec<SimplexIx>>>,
    ) -> Result<Self, SsetError> {
        if names.len() != trunc + 1 || faces.len() != trunc + 1 || degens.len() != trunc + 1 {
            return Err(SsetError::InvalidArgument(format!(
                "expected {} levels of data",
                trunc + 1
            )));
        }
        let levels = names
            .into_iter()
            .zip(faces)
            .zip(degens)
            .map(|((names, faces), degens)| LevelData {
                names,
                faces,
                degens,
            })
            .collect();
        Self::from_levels(trunc, levels)
    }

    fn validate(&self) -> Result<(), SsetError> {
        if self.levels.len() != self.trunc + 1 {
            return Err(SsetError::CorruptInput(format!(
                "expected {} levels, found {}",
                self.trunc + 1,
                self.levels.len()
            )));
        }
        for (n, lv) in self.levels.iter().enumerate() {
            let card = lv.names.len();
            let expected_faces = if n == 0 { 0 } else { n + 1 };
            if lv.faces.len() != expected_faces {
                return Err(SsetError::CorruptInput(format!(
                    "level {n}: expected {expected_faces} face maps, found {}",
                    lv.faces.len()
                )));
            }
            let expected_degens = if n == self.trunc { 0 } else { n + 1 };
            if lv.degens.len() != expected_degens {
                return Err(SsetError::CorruptInput(format!(
                    "level {n}: expected {expected_degens} degeneracy maps, found {}",
                    lv.degens.len()
                )));
            }
            for (i, tab) in lv.faces.iter().enumerate() {
                if tab.len() != card {
                    return Err(SsetError::CorruptInput(format!(
                        "level {n}: face table d_{i} has wrong length"
                    )));
                }
                let below = self.levels[n - 1].names.len() as SimplexIx;
                if let Some(&bad) = tab.iter().find(|&&v| v >= below) {
                    return Err(SsetError::CorruptInput(format!(
                        "level {n}: d_{i} hits out-of-range index {bad}"
                    )));
                }
            }
            for (i, tab) in lv.degens.iter().enumerate() {
                if tab.len() != card {
                    return Err(SsetError::CorruptInput(format!(
                        "level {n}: degeneracy table s_{i} has wrong length"
                    )));
                }
                let above = self.levels[n + 1].names.len() as SimplexIx;
                if let Some(&bad) = tab.iter().find(|&&v| v >= above) {
                    return Err(SsetError::CorruptInput(format!(
                        "level {n}: s_{i} hits out-of-range index {bad}"
                    )));
                }
            }
            let mut seen = BTreeMap::new();
            for (ix, name) in lv.names.iter().enumerate() {
                if let Some(prev) = seen.insert(name.clone(), ix) {
                    return Err(SsetError::CorruptInput(format!(
                        "level {n}: duplicate simplex name {name:?} at {prev} and {ix}"
                    )));
                }
            }
        }
        self.check_identities()
    }

    fn check_identities(&self) -> Result<(), SsetError> {
        let n_max = self.trunc;
        for n in 0..=n_max {
            let card = self.card(n) as SimplexIx;
            for x in 0..card {
                // d_i d_j = d_{j-1} d_i for i < j
                if n >= 2 {
                    for j in 1..=n {
                        for i in 0..j {
                            let a = self.face(n - 1, i, self.face(n, j, x));
                            let b = self.face(n - 1, j - 1, self.face(n, i, x));
                            if a != b {
                                return Err(SsetError::CorruptInput(format!(
                                    "d_{i} d_{j} != d_{} d_{i} at level {n} simplex {x}",
                                    j - 1
                                )));
                            }
                        }
                    }
                }
                // s_i s_j = s_{j+1} s_i for i <= j
                if n + 2 <= n_max {
                    for j in 0..=n {
                        for i in 0..=j {
                            let a = self.degeneracy(n + 1, i, self.degeneracy(n, j, x));
                            let b = self.degeneracy(n + 1, j + 1, self.degeneracy(n, i, x));
                            if a != b {
                                return Err(SsetError::CorruptInput(format!(
                                    "s_{i} s_{j} != s_{} s_{i} at level {n} simplex {x}",
                                    j + 1
                                )));
                            }
                        }
                    }
                }
                // d_i s_j relations
                if n + 1 <= n_max {
                    for j in 0..=n {
                        let sx = self.degeneracy(n, j, x);
                        for i in 0..=(n + 1) {
                            let got = self.face(n + 1, i, sx);
                            let expect = if i == j || i == j + 1 {
                                x
                            } else if i < j {
                                // d_i s_j = s_{j-1} d_i
                                self.degeneracy(n - 1, j - 1, self.face(n, i, x))
                            } else {
                                // i > j+1: d_i s_j = s_j d_{i-1}
                                self.degeneracy(n - 1, j, self.face(n, i - 1, x))
                            };
                            if got != expect {
                                return Err(SsetError::CorruptInput(format!(
                                    "d_{i} s_{j} violated at level {n} simplex {x}"
                                )));
                            }
                        }
                    }
                }
            }
        }
        Ok(())
    }

    pub fn trunc(&self) -> usize {
        self.trunc
    }

    pub fn card(&self, level: usize) -> usize {
        self.levels[level].names.len()
    }

    pub fn total_simplices(&self) -> usize {
        self.levels.iter().map(|l| l.names.len()).sum()
    }

    pub fn name(&self, level: usize, ix: SimplexIx) -> &str {
        &self.levels[level].names[ix as usize]
    }

    pub fn names(&self, level: usize) -> &[String] {
        &self.levels[level].names
    }

    pub fn index_of(&self, level: usize, name: &str) -> Option<SimplexIx> {
        self.levels[level]
            .names
            .iter()
            .position(|n| n == name)
            .map(|i| i as SimplexIx)
    }

    pub fn face(&self, level: usize, i: usize, x: SimplexIx) -> SimplexIx {
        self.levels[level].faces[i][x as usize]
    }

    pub fn degeneracy(&self, level: usize, i: usize, x: SimplexIx) -> SimplexIx {
        self.levels[level].degens[i][x as usize]
    }

    pub fn is_degenerate(&self, level: usize, x: SimplexIx) -> bool {
        if level == 0 {
            return false;
        }
        let below = &self.levels[level - 1];
        below.degens.iter().any(|tab| tab.iter().any(|&v| v == x))
    }

    /// Indices of nondegenerate simplices at a level, in index order.
    pub fn nondegenerate(&self, level: usize) -> Vec<SimplexIx> {
        let mut degenerate = vec![false; self.card(level)];
        if level > 0 {
            for tab in &self.levels[level - 1].degens {
                for &v in tab {
                    degenerate[v as usize] = true;
                }
            }
        }
        (0..self.card(level) as SimplexIx)
            .filter(|&x| !degenerate[x as usize])
            .collect()
    }

    /// Highest level carrying a nondegenerate simplex.
    pub fn dimension(&self) -> usize {
        (0..=self.trunc)
            .rev()
            .find(|&n| !self.nondegenerate(n).is_empty())
            .unwrap_or(0)
    }

    /// The terminal object: one simplex per level.
    pub fn point(trunc: usize) -> Self {
        Self::standard(StandardKind::Simplex, 0, None, trunc).expect("point is always valid")
    }

    /// Standard simplex, boundary or horn, truncated at `trunc`.
    ///
    /// Level-m simplices are monotone maps [m] -> [n], named by their value
    /// strings, e.g. "0.1.1" for s_1 of the edge 0->1 in Δ[1].
    pub fn standard(
        kind: StandardKind,
        n: usize,
        k: Option<usize>,
        trunc: usize,
    ) -> Result<Self, SsetError> {
        if n > trunc {
            return Err(SsetError::InvalidArgument(format!(
                "standard object of dimension {n} exceeds truncation {trunc}"
            )));
        }
        let k = match kind {
            StandardKind::Horn => match k {
                Some(k) if k <= n => k,
                _ => {
                    return Err(SsetError::InvalidArgument(
                        "horn index k must satisfy 0 <= k <= n".into(),
                    ))
                }
            },
            _ => 0,
        };
        let keep = |op: &[usize]| -> bool {
            match kind {
                StandardKind::Simplex => true,
                // omit the top face: maps that are not surjective onto [n]
                StandardKind::Boundary => (0..=n).any(|v| !op.contains(&v)),
                // image must miss some l != k
                StandardKind::Horn => (0..=n).any(|v| v != k && !op.contains(&v)),
            }
        };
        let mut levels_ops: Vec<Vec<Vec<usize>>> = Vec::with_capacity(trunc + 1);
        for m in 0..=trunc {
            let mut ops = Vec::new();
            enumerate_monotone(m, n, &mut ops);
            ops.retain(|op| keep(op));
            levels_ops.push(ops);
        }
        let mut levels = Vec::with_capacity(trunc + 1);
        for m in 0..=trunc {
            let ops = &levels_ops[m];
            let index_at = |mm: usize, op: &[usize]| -> SimplexIx {
                levels_ops[mm].iter().position(|o| o == op).unwrap() as SimplexIx
            };
            let names = ops.iter().map(|op| op_name(op)).collect();
            let faces = if m == 0 {
                Vec::new()
            } else {
                (0..=m)
                    .map(|i| {
                        ops.iter()
                            .map(|op| {
                                let mut f = op.clone();
                                f.remove(i);
                                index_at(m - 1, &f)
                            })
                            .collect()
                    })
                    .collect()
            };
            let degens = if m == trunc {
                Vec::new()
            } else {
                (0..=m)
                    .map(|i| {
                        ops.iter()
                            .map(|op| {
                                let mut f = op.clone();
                                f.insert(i, op[i]);
                                index_at(m + 1, &f)
                            })
                            .collect()
                    })
                    .collect()
            };
            levels.push(LevelData {
                names,
                faces,
                degens,
            });
        }
        TruncatedSSet::from_levels(trunc, levels)
    }

    /// A discrete object: vertices only, all higher simplices degenerate.
    pub fn discrete(names: &[String], trunc: usize) -> Result<Self, SsetError> {
        let card = names.len();
        let mut levels = Vec::with_capacity(trunc + 1);
        for m in 0..=trunc {
            let faces = if m == 0 {
                Vec::new()
            } else {
                vec![(0..card as SimplexIx).collect::<Vec<_>>(); m + 1]
            };
            let degens = if m == trunc {
                Vec::new()
            } else {
                vec![(0..card as SimplexIx).collect::<Vec<_>>(); m + 1]
            };
            levels.push(LevelData {
                names: names.to_vec(),
                faces,
                degens,
            });
        }
        TruncatedSSet::from_levels(trunc, levels)
    }

    /// A 1-dimensional object from a directed graph. A level-m simplex is a
    /// constant vertex or the degeneracy of an edge determined by the step
    /// position t of the monotone surjection [m] ->> [1].
    pub fn from_graph(
        vertices: &[String],
        edges: &[(String, usize, usize)],
        trunc: usize,
    ) -> Result<Self, SsetError> {
        if trunc == 0 && !edges.is_empty() {
            return Err(SsetError::InvalidArgument(
                "graph with edges needs truncation >= 1".into(),
            ));
        }
        for (name, s, t) in edges {
            if *s >= vertices.len() || *t >= vertices.len() {
                return Err(SsetError::InvalidArgument(format!(
                    "edge {name} has out-of-range endpoint"
                )));
            }
        }
        let nv = vertices.len();
        let vix = |v: usize| v as SimplexIx;
        let eix = |m: usize, e: usize, t: usize| (nv + e * m + (t - 1)) as SimplexIx;
        let mut levels = Vec::with_capacity(trunc + 1);
        for m in 0..=trunc {
            let mut names: Vec<String> = vertices.to_vec();
            if m >= 1 {
                for (e, edge) in edges.iter().enumerate() {
                    let _ = e;
                    for t in 1..=m {
                        if m == 1 {
                            names.push(edge.0.clone());
                        } else {
                            names.push(format!("{}@{}", edge.0, t));
                        }
                    }
                }
            }
            let faces = if m == 0 {
                Vec::new()
            } else {
                (0..=m)
                    .map(|i| {
                        let mut tab = Vec::new();
                        for v in 0..nv {
                            tab.push(vix(v));
                        }
                        for (e, &(_, src, tgt)) in edges.iter().enumerate() {
                            for t in 1..=m {
                                // the step surjection has t zeros then m+1-t ones;
                                // deleting index i drops a zero (i < t) or a one
                                let val = if i < t {
                                    if t == 1 {
                                        vix(tgt)
                                    } else {
                                        eix(m - 1, e, t - 1)
                                    }
                                } else if t == m {
                                    vix(src)
                                } else {
                                    eix(m - 1, e, t)
                                };
                                tab.push(val);
                            }
                        }
                        tab
                    })
                    .collect()
            };
            let degens = if m == trunc {
                Vec::new()
            } else {
                (0..=m)
                    .map(|i| {
                        let mut tab = Vec::new();
                        for v in 0..nv {
                            tab.push(vix(v));
                        }
                        if m >= 1 {
                            for (e, _) in edges.iter().enumerate() {
                                for t in 1..=m {
                                    let t_new = if i < t { t + 1 } else { t };
                                    tab.push(eix(m + 1, e, t_new));
                                }
                            }
                        }
                        tab
                    })
                    .collect()
            };
            levels.push(LevelData {
                names,
                faces,
                degens,
            });
        }
        TruncatedSSet::from_levels(trunc, levels)
    }

    /// Disjoint union with inclusion maps.部分 names are tag-prefixed when
    /// there is more than one part.
    pub fn disjoint_union(
        parts: &[&TruncatedSSet],
    ) -> Result<(SSetHandle, Vec<SMap>), SsetError> {
        if parts.is_empty() {
            return Err(SsetError::InvalidArgument(
                "disjoint union of zero parts".into(),
            ));
        }
        let trunc = parts[0].trunc;
        for p in parts {
            if p.trunc != trunc {
                return Err(SsetError::TruncationMismatch {
                    left: trunc,
                    right: p.trunc,
                });
            }
        }
        let tag_needed = parts.len() > 1;
        // offsets[pi][m]
        let mut offsets: Vec<Vec<SimplexIx>> = vec![vec![0; trunc + 1]; parts.len()];
        for m in 0..=trunc {
            let mut off = 0;
            for (pi, p) in parts.iter().enumerate() {
                offsets[pi][m] = off;
                off += p.card(m) as SimplexIx;
            }
        }
        let mut levels = Vec::with_capacity(trunc + 1);
        for m in 0..=trunc {
            let mut names = Vec::new();
            for (pi, p) in parts.iter().enumerate() {
                for x in 0..p.card(m) as SimplexIx {
                    let nm = if tag_needed {
                        format!("{}:{}", pi, p.name(m, x))
                    } else {
                        p.name(m, x).to_string()
                    };
                    names.push(nm);
                }
            }
            let faces = if m == 0 {
                Vec::new()
            } else {
                (0..=m)
                    .map(|i| {
                        let mut tab = Vec::new();
                        for (pi, p) in parts.iter().enumerate() {
                            for x in 0..p.card(m) as SimplexIx {
                                tab.push(offsets[pi][m - 1] + p.face(m, i, x));
                            }
                        }
                        tab
                    })
                    .collect()
            };
            let degens = if m == trunc {
                Vec::new()
            } else {
                (0..=m)
                    .map(|i| {
                        let mut tab = Vec::new();
                        for (pi, p) in parts.iter().enumerate() {
                            for x in 0..p.card(m) as SimplexIx {
                                tab.push(offsets[pi][m + 1] + p.degeneracy(m, i, x));
                            }
                        }
                        tab
                    })
                    .collect()
            };
            levels.push(LevelData {
                names,
                faces,
                degens,
            });
        }
        let obj = Arc::new(TruncatedSSet::from_levels(trunc, levels)?);
        let inclusions = parts
            .iter()
            .enumerate()
            .map(|(pi, p)| SMap {
                source: Arc::new((*p).clone()),
                target: obj.clone(),
                levels: (0..=trunc)
                    .map(|m| {
                        (0..p.card(m) as SimplexIx)
                            .map(|x| offsets[pi][m] + x)
                            .collect()
                    })
                    .collect(),
            })
            .collect();
        Ok((obj, inclusions))
    }
}

fn enumerate_monotone(m: usize, n: usize, out: &mut Vec<Vec<usize>>) {
    // all monotone (weakly increasing) maps [m] -> [n], lexicographic
    let mut cur = vec![0usize; m + 1];
    loop {
        out.push(cur.clone());
        let mut i = m as isize;
        loop {
            if i < 0 {
                return;
            }
            if cur[i as usize] < n {
                cur[i as usize] += 1;
                let v = cur[i as usize];
                for j in (i as usize + 1)..=m {
                    cur[j] = v;
                }
                break;
            }
            i -= 1;
        }
    }
}

fn op_name(op: &[usize]) -> String {
    op.iter()
        .map(|v| v.to_string())
        .collect::<Vec<_>>()
        .join(".")
}

/// A simplicial map between two objects of equal truncation.
#[derive(Debug, Clone)]
pub struct SMap {
    source: SSetHandle,
    target: SSetHandle,
    levels: Vec<Vec<SimplexIx>>,
}

impl PartialEq for SMap {
    fn eq(&self, other: &Self) -> bool {
        self.levels == other.levels
            && self.source == other.source
            && self.target == other.target
    }
}
impl Eq for SMap {}

impl SMap {
    pub fn new(
        source: SSetHandle,
        target: SSetHandle,
        levels: Vec<Vec<SimplexIx>>,
    ) -> Result<Self, SsetError> {
        if source.trunc() != target.trunc() {
            return Err(SsetError::TruncationMismatch {
                left: source.trunc(),
                right: target.trunc(),
            });
        }
        let m = SMap {
            source,
            target,
            levels,
        };
        m.validate()?;
        Ok(m)
    }

    pub(crate) fn new_unchecked(
        source: SSetHandle,
        target: SSetHandle,
        levels: Vec<Vec<SimplexIx>>,
    ) -> Self {
        let m = SMap {
            source,
            target,
            levels,
        };
        debug_assert!(m.validate().is_ok());
        m
    }

    fn validate(&self) -> Result<(), SsetError> {
        let n_max = self.source.trunc();
        if self.levels.len() != n_max + 1 {
            return Err(SsetError::NotSimplicial("wrong number of levels".into()));
        }
        for n in 0..=n_max {
            if self.levels[n].len() != self.source.card(n) {
                return Err(SsetError::NotSimplicial(format!(
                    "level {n} component has wrong length"
                )));
            }
            if let Some(&bad) = self.levels[n]
                .iter()
                .find(|&&v| v as usize >= self.target.card(n))
            {
                return Err(SsetError::NotSimplicial(format!(
                    "level {n} value {bad} out of range"
                )));
            }
        }
        for n in 1..=n_max {
            for x in 0..self.source.card(n) as SimplexIx {
                for i in 0..=n {
                    let a = self.levels[n - 1][self.source.face(n, i, x) as usize];
                    let b = self.target.face(n, i, self.levels[n][x as usize]);
                    if a != b {
                        return Err(SsetError::NotSimplicial(format!(
                            "face d_{i} at level {n} simplex {} ({})",
                            x,
                            self.source.name(n, x)
                        )));
                    }
                }
            }
        }
        for n in 0..n_max {
            for x in 0..self.source.card(n) as SimplexIx {
                for i in 0..=n {
                    let a = self.levels[n + 1][self.source.degeneracy(n, i, x) as usize];
                    let b = self.target.degeneracy(n, i, self.levels[n][x as usize]);
                    if a != b {
                        return Err(SsetError::NotSimplicial(format!(
                            "degeneracy s_{i} at level {n} simplex {x}"
                        )));
                    }
                }
            }
        }
        Ok(())
    }

    pub fn identity(x: SSetHandle) -> Self {
        let levels = (0..=x.trunc())
            .map(|n| (0..x.card(n) as SimplexIx).collect())
            .collect();
        SMap {
            source: x.clone(),
            target: x,
            levels,
        }
    }

    pub fn source(&self) -> &SSetHandle {
        &self.source
    }

    pub fn target(&self) -> &SSetHandle {
        &self.target
    }

    pub fn apply(&self, level: usize, x: SimplexIx) -> SimplexIx {
        self.levels[level][x as usize]
    }

    pub fn level(&self, level: usize) -> &[SimplexIx] {
        &self.levels[level]
    }

    /// g.compose(f) = g ∘ f.
    pub fn compose(&self, f: &SMap) -> Result<SMap, SsetError> {
        if f.target.as_ref() != self.source.as_ref() {
            return Err(SsetError::CodomainMismatch);
        }
        let levels = (0..=self.source.trunc())
            .map(|n| {
                f.levels[n]
                    .iter()
                    .map(|&x| self.levels[n][x as usize])
                    .collect()
            })
            .collect();
        Ok(SMap {
            source: f.source.clone(),
            target: self.target.clone(),
            levels,
        })
    }

    pub fn is_injective(&self) -> bool {
        (0..=self.source.trunc()).all(|n| {
            let mut seen = vec![false; self.target.card(n)];
            self.levels[n].iter().all(|&v| {
                let slot = &mut seen[v as usize];
                !std::mem::replace(slot, true)
            })
        })
    }

    pub fn is_surjective(&self) -> bool {
        (0..=self.source.trunc()).all(|n| {
            let mut seen = vec![false; self.target.card(n)];
            for &v in &self.levels[n] {
                seen[v as usize] = true;
            }
            seen.iter().all(|&b| b)
        })
    }

    pub fn is_iso(&self) -> bool {
        (0..=self.source.trunc()).all(|n| self.source.card(n) == self.target.card(n))
            && self.is_injective()
    }

    /// The unique map to the point.
    pub fn to_point(x: SSetHandle) -> Self {
        let point = Arc::new(TruncatedSSet::point(x.trunc()));
        let levels = (0..=x.trunc()).map(|n| vec![0; x.card(n)]).collect();
        SMap {
            source: x,
            target: point,
            levels,
        }
    }

    /// The map Δ[0] -> x picking a vertex.
    pub fn vertex(x: SSetHandle, v: SimplexIx) -> Result<Self, SsetError> {
        let trunc = x.trunc();
        if (v as usize) >= x.card(0) {
            return Err(SsetError::InvalidArgument(format!(
                "vertex index {v} out of range"
            )));
        }
        let point = Arc::new(TruncatedSSet::point(trunc));
        let mut levels = vec![vec![v]];
        let mut cur = v;
        for n in 0..trunc {
            cur = x.degeneracy(n, 0, cur);
            levels.push(vec![cur]);
        }
        SMap::new(point, x, levels)
    }

    /// Extends an assignment on nondegenerate simplices to a full map, using
    /// the unique degeneracy decomposition of the source.
    pub fn from_nondegenerate(
        source: SSetHandle,
        target: SSetHandle,
        assign: &BTreeMap<(usize, SimplexIx), SimplexIx>,
    ) -> Result<Self, SsetError> {
        let ez = EzDecomposition::new(&source);
        let trunc = source.trunc();
        let mut levels: Vec<Vec<SimplexIx>> = Vec::with_capacity(trunc + 1);
        for n in 0..=trunc {
            let mut tab = Vec::with_capacity(source.card(n));
            for x in 0..source.card(n) as SimplexIx {
                let d = ez.decompose(n, x);
                let base = assign
                    .get(&(d.base_level, d.base))
                    .copied()
                    .ok_or_else(|| {
                        SsetError::InvalidArgument(format!(
                            "no assignment for nondegenerate simplex {} at level {}",
                            source.name(d.base_level, d.base),
                            d.base_level
                        ))
                    })?;
                let mut cur = base;
                let mut lvl = d.base_level;
                for &i in d.word.iter().rev() {
                    cur = target.degeneracy(lvl, i, cur);
                    lvl += 1;
                }
                tab.push(cur);
            }
            levels.push(tab);
        }
        SMap::new(source, target, levels)
    }
}

/// Eilenberg-Zilber data: each simplex as an iterated degeneracy of a unique
/// nondegenerate simplex, with the word in admissible (strictly decreasing)
/// order.
#[derive(Debug, Clone)]
pub struct EzDecomposition {
    table: Vec<Vec<(usize, SimplexIx, Vec<usize>)>>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EzEntry {
    pub base_level: usize,
    pub base: SimplexIx,
    /// Degeneracy word s_{i_1} ... s_{i_k} with i_1 > ... > i_k; the base is
    /// hit by the rightmost letter first.
    pub word: Vec<usize>,
}

impl EzDecomposition {
    pub fn new(x: &TruncatedSSet) -> Self {
        let trunc = x.trunc();
        let mut table: Vec<Vec<(usize, SimplexIx, Vec<usize>)>> = Vec::with_capacity(trunc + 1);
        for n in 0..=trunc {
            // preimage under the highest possible degeneracy index
            let mut pre: Vec<Option<(usize, SimplexIx)>> = vec![None; x.card(n)];
            if n > 0 {
                for i in 0..n {
                    for below in 0..x.card(n - 1) as SimplexIx {
                        let img = x.degeneracy(n - 1, i, below);
                        match pre[img as usize] {
                            Some((j, _)) if j >= i => {}
                            _ => pre[img as usize] = Some((i, below)),
                        }
                    }
                }
            }
            let mut lvl = Vec::with_capacity(x.card(n));
            for s in 0..x.card(n) as SimplexIx {
                match pre[s as usize] {
                    None => lvl.push((n, s, Vec::new())),
                    Some((i, below)) => {
                        let (bl, bx, mut word) = table[n - 1][below as usize].clone();
                        let mut w = vec![i];
                        w.append(&mut word);
                        lvl.push((bl, bx, w));
                    }
                }
            }
            table.push(lvl);
        }
        EzDecomposition { table }
    }

    pub fn decompose(&self, level: usize, x: SimplexIx) -> EzEntry {
        let (base_level, base, word) = self.table[level][x as usize].clone();
        EzEntry {
            base_level,
            base,
            word,
        }
    }

    pub fn is_nondegenerate(&self, level: usize, x: SimplexIx) -> bool {
        self.table[level][x as usize].2.is_empty()
    }
}

/// Levelwise product with its two projections.
pub struct ProductData {
    pub object: SSetHandle,
    pub left: SMap,
    pub right: SMap,
}

pub fn product(x: &SSetHandle, y: &SSetHandle) -> Result<ProductData, SsetError> {
    if x.trunc() != y.trunc() {
        return Err(SsetError::TruncationMismatch {
            left: x.trunc(),
            right: y.trunc(),
        });
    }
    let trunc = x.trunc();
    let pair_ix =
        |m: usize, a: SimplexIx, b: SimplexIx| -> SimplexIx { a * y.card(m) as SimplexIx + b };
    let mut levels = Vec::with_capacity(trunc + 1);
    for m in 0..=trunc {
        let cx = x.card(m);
        let cy = y.card(m);
        let mut names = Vec::with_capacity(cx * cy);
        for a in 0..cx as SimplexIx {
            for b in 0..cy as SimplexIx {
                names.push(format!("({}|{})", x.name(m, a), y.name(m, b)));
            }
        }
        let faces = if m == 0 {
            Vec::new()
        } else {
            (0..=m)
                .map(|i| {
                    let mut tab = Vec::with_capacity(cx * cy);
                    for a in 0..cx as SimplexIx {
                        for b in 0..cy as SimplexIx {
                            tab.push(pair_ix(m - 1, x.face(m, i, a), y.face(m, i, b)));
                        }
                    }
                    tab
                })
                .collect()
        };
        let degens = if m == trunc {
            Vec::new()
        } else {
            (0..=m)
                .map(|i| {
                    let mut tab = Vec::with_capacity(cx * cy);
                    for a in 0..cx as SimplexIx {
                        for b in 0..cy as SimplexIx {
                            tab.push(pair_ix(
                                m + 1,
                                x.degeneracy(m, i, a),
                                y.degeneracy(m, i, b),
                            ));
                        }
                    }
                    tab
                })
                .collect()
        };
        levels.push(LevelData {
            names,
            faces,
            degens,
        });
    }
    let object = Arc::new(TruncatedSSet::from_levels(trunc, levels)?);
    let left = SMap {
        source: object.clone(),
        target: x.clone(),
        levels: (0..=trunc)
            .map(|m| {
                let cy = y.card(m) as SimplexIx;
                (0..object.card(m) as SimplexIx).map(|p| p / cy).collect()
            })
            .collect(),
    };
    let right = SMap {
        source: object.clone(),
        target: y.clone(),
        levels: (0..=trunc)
            .map(|m| {
                let cy = y.card(m) as SimplexIx;
                (0..object.card(m) as SimplexIx).map(|p| p % cy).collect()
            })
            .collect(),
    };
    Ok(ProductData {
        object,
        left,
        right,
    })
}

/// Pairing into a product: from u: W -> X and v: W -> Y, the map W -> X x Y.
pub fn product_pair(prod: &ProductData, u: &SMap, v: &SMap) -> Result<SMap, SsetError> {
    if u.source().as_ref() != v.source().as_ref() {
        return Err(SsetError::CodomainMismatch);
    }
    let trunc = u.source().trunc();
    let y_card: Vec<SimplexIx> = (0..=trunc)
        .map(|m| prod.right.target().card(m) as SimplexIx)
        .collect();
    let levels = (0..=trunc)
        .map(|m| {
            (0..u.source().card(m) as SimplexIx)
                .map(|w| u.apply(m, w) * y_card[m] + v.apply(m, w))
                .collect()
        })
        .collect();
    SMap::new(u.source().clone(), prod.object.clone(), levels)
}

/// Levelwise fiber product of f: X -> Z and g: Y -> Z, with projections.
pub struct PullbackData {
    pub object: SSetHandle,
    pub to_left: SMap,
    pub to_right: SMap,
    pairs: Vec<Vec<(SimplexIx, SimplexIx)>>,
    pair_index: Vec<BTreeMap<(SimplexIx, SimplexIx), SimplexIx>>,
}

pub fn pullback(f: &SMap, g: &SMap) -> Result<PullbackData, SsetError> {
    if f.target().as_ref() != g.target().as_ref() {
        return Err(SsetError::CodomainMismatch);
    }
    let x = f.source();
    let y = g.source();
    let trunc = x.trunc();
    let mut pairs: Vec<Vec<(SimplexIx, SimplexIx)>> = Vec::with_capacity(trunc + 1);
    let mut pair_index: Vec<BTreeMap<(SimplexIx, SimplexIx), SimplexIx>> = Vec::new();
    for m in 0..=trunc {
        let mut lvl = Vec::new();
        let mut by_image: BTreeMap<SimplexIx, Vec<SimplexIx>> = BTreeMap::new();
        for b in 0..y.card(m) as SimplexIx {
            by_image.entry(g.apply(m, b)).or_default().push(b);
        }
        for a in 0..x.card(m) as SimplexIx {
            if let Some(bs) = by_image.get(&f.apply(m, a)) {
                for &b in bs {
                    lvl.push((a, b));
                }
            }
        }
        let ix: BTreeMap<(SimplexIx, SimplexIx), SimplexIx> = lvl
            .iter()
            .enumerate()
            .map(|(i, &p)| (p, i as SimplexIx))
            .collect();
        pairs.push(lvl);
        pair_index.push(ix);
    }
    let mut levels = Vec::with_capacity(trunc + 1);
    for m in 0..=trunc {
        let names = pairs[m]
            .iter()
            .map(|&(a, b)| format!("({}|{})", x.name(m, a), y.name(m, b)))
            .collect();
        let faces = if m == 0 {
            Vec::new()
        } else {
            (0..=m)
                .map(|i| {
                    pairs[m]
                        .iter()
                        .map(|&(a, b)| pair_index[m - 1][&(x.face(m, i, a), y.face(m, i, b))])
                        .collect()
                })
                .collect()
        };
        let degens = if m == trunc {
            Vec::new()
        } else {
            (0..=m)
                .map(|i| {
                    pairs[m]
                        .iter()
                        .map(|&(a, b)| {
                            pair_index[m + 1][&(x.degeneracy(m, i, a), y.degeneracy(m, i, b))]
                        })
                        .collect()
                })
                .collect()
        };
        levels.push(LevelData {
            names,
            faces,
            degens,
        });
    }
    let object = Arc::new(TruncatedSSet::from_levels(trunc, levels)?);
    let to_left = SMap {
        source: object.clone(),
        target: x.clone(),
        levels: pairs
            .iter()
            .map(|lvl| lvl.iter().map(|&(a, _)| a).collect())
            .collect(),
    };
    let to_right = SMap {
        source: object.clone(),
        target: y.clone(),
        levels: pairs
            .iter()
            .map(|lvl| lvl.iter().map(|&(_, b)| b).collect())
            .collect(),
    };
    Ok(PullbackData {
        object,
        to_left,
        to_right,
        pairs,
        pair_index,
    })
}

impl PullbackData {
    pub fn pair_at(&self, level: usize, ix: SimplexIx) -> (SimplexIx, SimplexIx) {
        self.pairs[level][ix as usize]
    }

    pub fn index_of_pair(&self, level: usize, a: SimplexIx, b: SimplexIx) -> Option<SimplexIx> {
        self.pair_index[level].get(&(a, b)).copied()
    }

    /// Universal property: from a cone (u, v) with f∘u = g∘v, the unique map
    /// into the pullback.
    pub fn pair(&self, u: &SMap, v: &SMap) -> Result<SMap, SsetError> {
        if u.source().as_ref() != v.source().as_ref() {
            return Err(SsetError::CodomainMismatch);
        }
        let trunc = u.source().trunc();
        let mut levels = Vec::with_capacity(trunc + 1);
        for m in 0..=trunc {
            let mut tab = Vec::with_capacity(u.source().card(m));
            for w in 0..u.source().card(m) as SimplexIx {
                let a = u.apply(m, w);
                let b = v.apply(m, w);
                let ix = self.index_of_pair(m, a, b).ok_or_else(|| {
                    SsetError::InvalidArgument(
                        "cone does not commute with the pullback legs".into(),
                    )
                })?;
                tab.push(ix);
            }
            levels.push(tab);
        }
        SMap::new(u.source().clone(), self.object.clone(), levels)
    }
}

/// Strict colimit of a finite composable chain. The object is the final
/// stage; stabilization is tracked per level.
pub struct SequenceColimit {
    pub object: SSetHandle,
    /// composite map from each stage into the final stage
    pub stage_maps: Vec<SMap>,
    /// per level: earliest stage k such that every chain map from k on is
    /// bijective at this level; None if the final map still moves things
    pub stabilized_from: Vec<Option<usize>>,
}

pub fn colimit_sequence(maps: &[SMap]) -> Result<SequenceColimit, SsetError> {
    if maps.is_empty() {
        return Err(SsetError::InvalidArgument(
            "colimit of an empty chain".into(),
        ));
    }
    for w in maps.windows(2) {
        if w[0].target().as_ref() != w[1].source().as_ref() {
            return Err(SsetError::InvalidArgument(
                "chain maps do not compose".into(),
            ));
        }
    }
    let object = maps.last().unwrap().target().clone();
    let trunc = object.trunc();
    let mut suffix: Vec<SMap> = vec![SMap::identity(object.clone())];
    for m in maps.iter().rev() {
        let last = suffix.last().unwrap();
        suffix.push(last.compose(m)?);
    }
    suffix.reverse();
    let bijective_at = |map: &SMap, lvl: usize| -> bool {
        map.source().card(lvl) == map.target().card(lvl) && {
            let mut seen = vec![false; map.target().card(lvl)];
            map.level(lvl).iter().all(|&v| {
                let slot = &mut seen[v as usize];
                !std::mem::replace(slot, true)
            })
        }
    };
    let stabilized_from = (0..=trunc)
        .map(|lvl| {
            let mut from = None;
            for k in (0..maps.len()).rev() {
                if bijective_at(&maps[k], lvl) {
                    from = Some(k);
                } else {
                    break;
                }
            }
            from
        })
        .collect();
    Ok(SequenceColimit {
        object,
        stage_maps: suffix,
        stabilized_from,
    })
}

/// Connected components: the coequalizer of d_0, d_1 on vertices.
pub struct Pi0 {
    pub class_of: Vec<u32>,
    pub count: usize,
}

pub fn pi0(x: &TruncatedSSet) -> Pi0 {
    let nv = x.card(0);
    let mut parent: Vec<u32> = (0..nv as u32).collect();
    fn find(parent: &mut [u32], a: u32) -> u32 {
        let mut a = a;
        while parent[a as usize] != a {
            parent[a as usize] = parent[parent[a as usize] as usize];
            a = parent[a as usize];
        }
        a
    }
    if x.trunc() >= 1 {
        for e in 0..x.card(1) as SimplexIx {
            let a = find(&mut parent, x.face(1, 0, e));
            let b = find(&mut parent, x.face(1, 1, e));
            if a != b {
                let (lo, hi) = if a < b { (a, b) } else { (b, a) };
                parent[hi as usize] = lo;
            }
        }
    }
    let mut roots: Vec<u32> = Vec::new();
    let mut class_of = vec![0u32; nv];
    for v in 0..nv as u32 {
        let r = find(&mut parent, v);
        let c = match roots.iter().position(|&q| q == r) {
            Some(c) => c as u32,
            None => {
                roots.push(r);
                (roots.len() - 1) as u32
            }
        };
        class_of[v as usize] = c;
    }
    Pi0 {
        class_of,
        count: roots.len(),
    }
}

/// All simplicial maps K -> Y, enumerated by backtracking over the
/// nondegenerate simplices of K in dimension order.
pub struct SimplexMaps {
    pub maps: Vec<SMap>,
    /// top nondegenerate dimension of K
    pub dim_k: usize,
}

pub fn simplex_maps(k: &SSetHandle, y: &SSetHandle) -> Result<SimplexMaps, SsetError> {
    if k.trunc() != y.trunc() {
        return Err(SsetError::TruncationMismatch {
            left: k.trunc(),
            right: y.trunc(),
        });
    }
    let ez = EzDecomposition::new(k);
    let trunc = k.trunc();
    let mut cells: Vec<(usize, SimplexIx)> = Vec::new();
    for n in 0..=trunc {
        for x in k.nondegenerate(n) {
            cells.push((n, x));
        }
    }
    let dim_k = cells.last().map(|&(n, _)| n).unwrap_or(0);
    let cell_pos: BTreeMap<(usize, SimplexIx), usize> =
        cells.iter().enumerate().map(|(i, &c)| (c, i)).collect();
    struct Ctx<'a> {
        cells: &'a [(usize, SimplexIx)],
        cell_pos: &'a BTreeMap<(usize, SimplexIx), usize>,
        ez: &'a EzDecomposition,
        k: &'a TruncatedSSet,
        y: &'a TruncatedSSet,
        results: Vec<Vec<SimplexIx>>,
    }
    impl Ctx<'_> {
        fn eval(&self, assign: &[SimplexIx], level: usize, x: SimplexIx) -> SimplexIx {
            let d = self.ez.decompose(level, x);
            let mut cur = assign[self.cell_pos[&(d.base_level, d.base)]];
            let mut lvl = d.base_level;
            for &i in d.word.iter().rev() {
                cur = self.y.degeneracy(lvl, i, cur);
                lvl += 1;
            }
            cur
        }
        fn go(&mut self, pos: usize, assign: &mut Vec<SimplexIx>) {
            if pos == self.cells.len() {
                self.results.push(assign.clone());
                return;
            }
            let (n, x) = self.cells[pos];
            'cand: for c in 0..self.y.card(n) as SimplexIx {
                if n > 0 {
                    for i in 0..=n {
                        let fx = self.k.face(n, i, x);
                        let want = self.eval(assign, n - 1, fx);
                        if self.y.face(n, i, c) != want {
                            continue 'cand;
                        }
                    }
                }
                assign[pos] = c;
                self.go(pos + 1, assign);
            }
        }
    }
    let mut ctx = Ctx {
        cells: &cells,
        cell_pos: &cell_pos,
        ez: &ez,
        k,
        y,
        results: Vec::new(),
    };
    let mut assign = vec![0; cells.len()];
    ctx.go(0, &mut assign);
    let results = ctx.results;
    let mut maps = Vec::with_capacity(results.len());
    for r in results {
        let assign_map: BTreeMap<(usize, SimplexIx), SimplexIx> = cells
            .iter()
            .enumerate()
            .map(|(i, &c)| (c, r[i]))
            .collect();
        maps.push(SMap::from_nondegenerate(k.clone(), y.clone(), &assign_map)?);
    }
    Ok(SimplexMaps { maps, dim_k })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn h(x: TruncatedSSet) -> SSetHandle {
        Arc::new(x)
    }

    #[test]
    fn point_has_one_simplex_per_level() {
        let p = TruncatedSSet::point(3);
        for n in 0..=3 {
            assert_eq!(p.card(n), 1);
        }
        assert_eq!(p.nondegenerate(0).len(), 1);
        for n in 1..=3 {
            assert_eq!(p.nondegenerate(n).len(), 0);
        }
    }

    #[test]
    fn boundary_of_triangle_counts() {
        let b = TruncatedSSet::standard(StandardKind::Boundary, 2, None, 2).unwrap();
        assert_eq!(b.nondegenerate(0).len(), 3);
        assert_eq!(b.nondegenerate(1).len(), 3);
        assert_eq!(b.nondegenerate(2).len(), 0);
    }

    #[test]
    fn horn_counts() {
        let l = TruncatedSSet::standard(StandardKind::Horn, 2, Some(0), 2).unwrap();
        assert_eq!(l.nondegenerate(0).len(), 3);
        assert_eq!(l.nondegenerate(1).len(), 2);
        // the two edges are the d_1 and d_2 faces of the triangle
        let names: Vec<&str> = l.nondegenerate(1).iter().map(|&e| l.name(1, e)).collect();
        assert!(names.contains(&"0.1"));
        assert!(names.contains(&"0.2"));
        assert!(!names.contains(&"1.2"));
    }

    #[test]
    fn horn_k_out_of_range_rejected() {
        assert!(TruncatedSSet::standard(StandardKind::Horn, 2, Some(3), 3).is_err());
        assert!(TruncatedSSet::standard(StandardKind::Simplex, 4, None, 3).is_err());
    }

    #[test]
    fn product_with_point_is_identity_like() {
        let d1 = h(TruncatedSSet::standard(StandardKind::Simplex, 1, None, 3).unwrap());
        let p = h(TruncatedSSet::point(3));
        let prod = product(&d1, &p).unwrap();
        assert!(prod.left.is_iso());
    }

    #[test]
    fn square_has_two_nondegenerate_triangles() {
        let d1 = h(TruncatedSSet::standard(StandardKind::Simplex, 1, None, 2).unwrap());
        let prod = product(&d1, &d1).unwrap();
        assert_eq!(prod.object.nondegenerate(2).len(), 2);
    }

    #[test]
    fn cube_has_six_nondegenerate_cells() {
        let d1 = h(TruncatedSSet::standard(StandardKind::Simplex, 1, None, 3).unwrap());
        let sq = product(&d1, &d1).unwrap();
        let cube = product(&sq.object, &d1).unwrap();
        assert_eq!(cube.object.nondegenerate(3).len(), 6);
    }

    #[test]
    fn pullback_over_point_is_product() {
        let d1 = h(TruncatedSSet::standard(StandardKind::Simplex, 1, None, 2).unwrap());
        let f = SMap::to_point(d1.clone());
        let g = SMap::to_point(d1.clone());
        let pb = pullback(&f, &g).unwrap();
        let prod = product(&d1, &d1).unwrap();
        for n in 0..=2 {
            assert_eq!(pb.object.card(n), prod.object.card(n));
        }
    }

    #[test]
    fn pullback_of_identity_is_domain() {
        let d1 = h(TruncatedSSet::standard(StandardKind::Simplex, 1, None, 2).unwrap());
        let id = SMap::identity(d1.clone());
        let pb = pullback(&id, &id).unwrap();
        assert!(pb.to_left.is_iso());
    }

    #[test]
    fn pullback_of_vertex_along_identity() {
        let d1 = h(TruncatedSSet::standard(StandardKind::Simplex, 1, None, 2).unwrap());
        let v = SMap::vertex(d1.clone(), 0).unwrap();
        let id = SMap::identity(d1.clone());
        let pb = pullback(&v, &id).unwrap();
        // fiber of vertex 0: a single point
        assert_eq!(pb.object.card(0), 1);
        assert_eq!(pb.object.nondegenerate(1).len(), 0);
    }

    #[test]
    fn ez_words_are_admissible() {
        let d1 = h(TruncatedSSet::standard(StandardKind::Simplex, 1, None, 3).unwrap());
        let ez = EzDecomposition::new(&d1);
        for n in 0..=3usize {
            for x in 0..d1.card(n) as SimplexIx {
                let e = ez.decompose(n, x);
                assert_eq!(e.base_level + e.word.len(), n);
                for w in e.word.windows(2) {
                    assert!(w[0] > w[1], "word not strictly decreasing: {:?}", e.word);
                }
                assert!(!d1.is_degenerate(e.base_level, e.base));
                let mut cur = e.base;
                let mut lvl = e.base_level;
                for &i in e.word.iter().rev() {
                    cur = d1.degeneracy(lvl, i, cur);
                    lvl += 1;
                }
                assert_eq!(cur, x);
            }
        }
    }

    #[test]
    fn ez_double_degeneracy_canonical_word() {
        // s_0 s_0 x must decompose with word (s_1 s_0)
        let d1 = h(TruncatedSSet::standard(StandardKind::Simplex, 1, None, 3).unwrap());
        let ez = EzDecomposition::new(&d1);
        let e01 = d1.index_of(1, "0.1").unwrap();
        let s0 = d1.degeneracy(1, 0, e01);
        let s00 = d1.degeneracy(2, 0, s0);
        let d = ez.decompose(3, s00);
        assert_eq!(d.base, e01);
        assert_eq!(d.word, vec![1, 0]);
    }

    #[test]
    fn ez_is_a_bijection() {
        let b = h(TruncatedSSet::standard(StandardKind::Boundary, 2, None, 3).unwrap());
        let ez = EzDecomposition::new(&b);
        for n in 0..=3usize {
            let mut seen = std::collections::BTreeSet::new();
            for x in 0..b.card(n) as SimplexIx {
                let e = ez.decompose(n, x);
                assert!(seen.insert((e.base_level, e.base, e.word.clone())));
            }
            assert_eq!(seen.len(), b.card(n));
        }
    }

    #[test]
    fn pi0_of_standard_objects() {
        let d2 = TruncatedSSet::standard(StandardKind::Simplex, 2, None, 2).unwrap();
        assert_eq!(pi0(&d2).count, 1);
        let b1 = TruncatedSSet::standard(StandardKind::Boundary, 1, None, 2).unwrap();
        assert_eq!(pi0(&b1).count, 2);
    }

    #[test]
    fn simplex_maps_yoneda() {
        // maps Δ[n] -> Y biject with Y_n
        let y = h(TruncatedSSet::standard(StandardKind::Boundary, 2, None, 3).unwrap());
        for n in 0..=2usize {
            let dn = h(TruncatedSSet::standard(StandardKind::Simplex, n, None, 3).unwrap());
            let sm = simplex_maps(&dn, &y).unwrap();
            assert_eq!(sm.maps.len(), y.card(n), "level {n}");
        }
    }

    #[test]
    fn simplex_maps_of_point_are_vertices() {
        let y = h(TruncatedSSet::standard(StandardKind::Horn, 2, Some(1), 2).unwrap());
        let p = h(TruncatedSSet::point(2));
        let sm = simplex_maps(&p, &y).unwrap();
        assert_eq!(sm.maps.len(), y.card(0));
    }

    #[test]
    fn colimit_of_identity_chain_stabilizes() {
        let d1 = h(TruncatedSSet::standard(StandardKind::Simplex, 1, None, 2).unwrap());
        let id = SMap::identity(d1.clone());
        let col = colimit_sequence(&[id.clone(), id.clone(), id]).unwrap();
        assert_eq!(col.object.as_ref(), d1.as_ref());
        for lvl in &col.stabilized_from {
            assert_eq!(*lvl, Some(0));
        }
    }

    #[test]
    fn colimit_of_window_shift_not_stabilized() {
        // discrete {0..9} with a saturating shift: not injective at the cap
        let names: Vec<String> = (0..10).map(|i| i.to_string()).collect();
        let d = h(TruncatedSSet::discrete(&names, 1).unwrap());
        let shift: Vec<SimplexIx> = (0..10).map(|i| if i < 9 { i + 1 } else { 9 }).collect();
        let m = SMap::new(d.clone(), d.clone(), vec![shift.clone(), shift]).unwrap();
        let chain: Vec<SMap> = (0..5).map(|_| m.clone()).collect();
        let col = colimit_sequence(&chain).unwrap();
        assert!(col.stabilized_from.iter().all(|s| s.is_none()));
        // the stage-0 window lands 5 steps up
        assert_eq!(col.stage_maps[0].apply(0, 0), 5);
    }

    #[test]
    fn colimit_eventually_identity_stabilizes() {
        let names: Vec<String> = (0..4).map(|i| i.to_string()).collect();
        let d = h(TruncatedSSet::discrete(&names, 1).unwrap());
        let swap: Vec<SimplexIx> = vec![1, 0, 2, 3];
        let m = SMap::new(d.clone(), d.clone(), vec![swap.clone(), swap]).unwrap();
        let id = SMap::identity(d.clone());
        let col = colimit_sequence(&[m, id.clone(), id]).unwrap();
        assert!(col.stabilized_from.iter().all(|s| s == &Some(0)));
    }

    #[test]
    fn mixed_truncation_rejected() {
        let a = h(TruncatedSSet::point(2));
        let b = h(TruncatedSSet::point(3));
        assert!(matches!(
            product(&a, &b),
            Err(SsetError::TruncationMismatch { .. })
        ));
    }

    #[test]
    fn graph_circle_validates() {
        let c3 = TruncatedSSet::from_graph(
            &["v0".into(), "v1".into(), "v2".into()],
            &[
                ("e0".into(), 0, 1),
                ("e1".into(), 1, 2),
                ("e2".into(), 2, 0),
            ],
            3,
        )
        .unwrap();
        assert_eq!(c3.nondegenerate(0).len(), 3);
        assert_eq!(c3.nondegenerate(1).len(), 3);
        assert_eq!(c3.nondegenerate(2).len(), 0);
        assert_eq!(pi0(&c3).count, 1);
    }

    #[test]
    fn disjoint_union_counts() {
        let p = TruncatedSSet::point(2);
        let (u, incls) = TruncatedSSet::disjoint_union(&[&p, &p]).unwrap();
        assert_eq!(u.card(0), 2);
        assert_eq!(incls.len(), 2);
        assert_eq!(pi0(&u).count, 2);
    }

    #[test]
    fn product_universal_property_on_cones() {
        let d1 = h(TruncatedSSet::standard(StandardKind::Simplex, 1, None, 2).unwrap());
        let prod = product(&d1, &d1).unwrap();
        let id = SMap::identity(d1.clone());
        let diag = product_pair(&prod, &id, &id).unwrap();
        assert_eq!(prod.left.compose(&diag).unwrap(), id);
        assert_eq!(prod.right.compose(&diag).unwrap(), id);
    }
}
