//! Power graphs with the canonical vertex order and, for `D_2pq`, the
//! five-block partition used to display their matrices.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::group::{GroupElement, GroupKind, GroupSpec, PrimePair};
use crate::linalg::IntMatrix;

/// Which graph matrix to build.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum MatrixKind {
    Adjacency,
    Laplacian,
    SignlessLaplacian,
}

impl MatrixKind {
    pub const ALL: [MatrixKind; 3] = [
        MatrixKind::Adjacency,
        MatrixKind::Laplacian,
        MatrixKind::SignlessLaplacian,
    ];

    pub fn as_str(&self) -> &'static str {
        match self {
            MatrixKind::Adjacency => "adjacency",
            MatrixKind::Laplacian => "laplacian",
            MatrixKind::SignlessLaplacian => "signless_laplacian",
        }
    }
}

impl fmt::Display for MatrixKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for MatrixKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().replace('-', "_").as_str() {
            "adjacency" | "adj" | "a" => Ok(MatrixKind::Adjacency),
            "laplacian" | "lap" | "l" => Ok(MatrixKind::Laplacian),
            "signless_laplacian" | "signless" | "slap" | "q" => Ok(MatrixKind::SignlessLaplacian),
            other => Err(Error::Usage(format!("unknown matrix kind {other:?}"))),
        }
    }
}

/// Blocks `V1..V5` of `D_2pq`, as indices into the canonical vertex order:
/// identity, generators of `<a>`, nonzero multiples of `p`, nonzero multiples
/// of `q`, and the reflections.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CanonicalPartition {
    #[serde(skip)]
    pub pair: Option<PrimePair>,
    #[serde(rename = "V1")]
    pub v1: Vec<usize>,
    #[serde(rename = "V2")]
    pub v2: Vec<usize>,
    #[serde(rename = "V3")]
    pub v3: Vec<usize>,
    #[serde(rename = "V4")]
    pub v4: Vec<usize>,
    #[serde(rename = "V5")]
    pub v5: Vec<usize>,
}

impl CanonicalPartition {
    /// Partition of `D_2pq` in the canonical order `e, a, ..., b, ab, ...`.
    pub fn for_dihedral(pair: PrimePair) -> Self {
        let (p, q, n) = (pair.p, pair.q, pair.pq());
        let rot = |i: u64| i as usize;
        let v2 = (1..n)
            .filter(|i| i % p != 0 && i % q != 0)
            .map(rot)
            .collect();
        let v3 = (1..q).map(|k| rot(k * p)).collect();
        let v4 = (1..p).map(|k| rot(k * q)).collect();
        let v5 = (n..2 * n).map(rot).collect();
        Self {
            pair: Some(pair),
            v1: vec![0],
            v2,
            v3,
            v4,
            v5,
        }
    }

    pub fn blocks(&self) -> [&[usize]; 5] {
        [&self.v1, &self.v2, &self.v3, &self.v4, &self.v5]
    }

    /// Concatenated blocks: the permutation taking the canonical order to the
    /// partitioned order.
    pub fn order(&self) -> Vec<usize> {
        self.blocks().concat()
    }

    /// Block ranges `[start, end)` in the partitioned order.
    pub fn ranges(&self) -> [std::ops::Range<usize>; 5] {
        let mut start = 0;
        self.blocks().map(|b| {
            let r = start..start + b.len();
            start += b.len();
            r
        })
    }
}

/// Simple undirected graph on the group elements; `x ~ y` iff one is a
/// power of the other.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PowerGraph {
    spec: GroupSpec,
    vertices: Vec<GroupElement>,
    rows: Vec<Vec<u64>>,
    partition: Option<CanonicalPartition>,
}

fn bit_words(n: usize) -> usize {
    n.div_ceil(64)
}

impl PowerGraph {
    pub fn build(spec: GroupSpec) -> Self {
        let vertices = spec.elements();
        let n = vertices.len();
        let mut rows = vec![vec![0u64; bit_words(n)]; n];
        for i in 0..n {
            for j in i + 1..n {
                let related = spec
                    .power_related(vertices[i], vertices[j])
                    .expect("distinct elements of the same group");
                if related {
                    rows[i][j / 64] |= 1 << (j % 64);
                    rows[j][i / 64] |= 1 << (i % 64);
                }
            }
        }
        let partition = match spec.kind {
            GroupKind::Dihedral => {
                PrimePair::from_product(spec.n).map(CanonicalPartition::for_dihedral)
            }
            GroupKind::Cyclic => None,
        };
        Self {
            spec,
            vertices,
            rows,
            partition,
        }
    }

    pub fn spec(&self) -> GroupSpec {
        self.spec
    }

    pub fn vertices(&self) -> &[GroupElement] {
        &self.vertices
    }

    pub fn vertex_count(&self) -> usize {
        self.vertices.len()
    }

    pub fn partition(&self) -> Option<&CanonicalPartition> {
        self.partition.as_ref()
    }

    pub fn has_edge(&self, i: usize, j: usize) -> bool {
        self.rows[i][j / 64] >> (j % 64) & 1 == 1
    }

    pub fn degree(&self, i: usize) -> usize {
        self.rows[i].iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn degrees(&self) -> Vec<usize> {
        (0..self.vertex_count()).map(|i| self.degree(i)).collect()
    }

    /// Edges `(i, j)` with `i < j`, lexicographic.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let n = self.vertex_count();
        (0..n)
            .flat_map(|i| (i + 1..n).map(move |j| (i, j)))
            .filter(|&(i, j)| self.has_edge(i, j))
            .collect()
    }

    pub fn edge_count(&self) -> usize {
        self.degrees().iter().sum::<usize>() / 2
    }

    pub fn is_complete(&self) -> bool {
        let n = self.vertex_count();
        self.edge_count() == n * n.saturating_sub(1) / 2
    }

    pub fn adjacency_matrix(&self) -> IntMatrix {
        IntMatrix::from_fn(self.vertex_count(), |i, j| {
            if self.has_edge(i, j) {
                BigInt::one()
            } else {
                BigInt::zero()
            }
        })
    }

    pub fn degree_matrix(&self) -> IntMatrix {
        IntMatrix::from_fn(self.vertex_count(), |i, j| {
            if i == j {
                BigInt::from(self.degree(i))
            } else {
                BigInt::zero()
            }
        })
    }

    /// `D - A`.
    pub fn laplacian_matrix(&self) -> IntMatrix {
        self.degree_matrix().sub(&self.adjacency_matrix())
    }

    /// `D + A`.
    pub fn signless_laplacian_matrix(&self) -> IntMatrix {
        self.degree_matrix().add(&self.adjacency_matrix())
    }

    pub fn matrix(&self, kind: MatrixKind) -> IntMatrix {
        match kind {
            MatrixKind::Adjacency => self.adjacency_matrix(),
            MatrixKind::Laplacian => self.laplacian_matrix(),
            MatrixKind::SignlessLaplacian => self.signless_laplacian_matrix(),
        }
    }

    /// The matrix with rows and columns in `V1..V5` order, when the partition exists.
    pub fn partitioned_matrix(&self, kind: MatrixKind) -> Option<IntMatrix> {
        let order = self.partition.as_ref()?.order();
        Some(self.matrix(kind).permuted(&order))
    }

    /// Graph induced on the given vertex indices, as an adjacency matrix.
    pub fn induced_adjacency(&self, idx: &[usize]) -> IntMatrix {
        self.adjacency_matrix().principal(idx)
    }

    pub fn export(&self, format: ExportFormat) -> String {
        match format {
            ExportFormat::Dot => self.to_dot(),
            ExportFormat::Json => self.to_json(),
        }
    }

    pub fn to_dot(&self) -> String {
        let mut out = format!("graph \"{}\" {{\n", self.spec);
        for (i, v) in self.vertices.iter().enumerate() {
            out.push_str(&format!("  {i} [label=\"{v}\"];\n"));
        }
        for (i, j) in self.edges() {
            out.push_str(&format!("  {i} -- {j};\n"));
        }
        out.push_str("}\n");
        out
    }

    pub fn document(&self) -> GraphDocument {
        GraphDocument {
            group: self.spec,
            vertices: self.vertices.iter().map(|v| v.to_string()).collect(),
            edges: self.edges().into_iter().map(|(i, j)| [i, j]).collect(),
            partition: self.partition.clone(),
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(&self.document()).expect("graph document serializes")
    }

    /// Parses the JSON export back into a graph, checking it against the group.
    pub fn from_json(text: &str) -> Result<Self> {
        let doc: GraphDocument =
            serde_json::from_str(text).map_err(|e| Error::Usage(format!("bad graph JSON: {e}")))?;
        Self::from_document(doc)
    }

    pub fn from_document(doc: GraphDocument) -> Result<Self> {
        let spec = doc.group;
        let vertices = spec.elements();
        let labels: Vec<String> = vertices.iter().map(|v| v.to_string()).collect();
        if labels != doc.vertices {
            return Err(Error::Usage(format!("vertex labels do not match {spec}")));
        }
        let n = vertices.len();
        let mut rows = vec![vec![0u64; bit_words(n)]; n];
        for [i, j] in doc.edges {
            if i >= n || j >= n || i == j {
                return Err(Error::Usage(format!("bad edge [{i}, {j}]")));
            }
            rows[i][j / 64] |= 1 << (j % 64);
            rows[j][i / 64] |= 1 << (i % 64);
        }
        let partition = doc.partition.map(|mut p| {
            p.pair = PrimePair::from_product(spec.n);
            p
        });
        Ok(Self {
            spec,
            vertices,
            rows,
            partition,
        })
    }
}

/// JSON export schema.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GraphDocument {
    pub group: GroupSpec,
    pub vertices: Vec<String>,
    pub edges: Vec<[usize; 2]>,
    pub partition: Option<CanonicalPartition>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ExportFormat {
    Dot,
    Json,
}

impl FromStr for ExportFormat {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "dot" => Ok(ExportFormat::Dot),
            "json" => Ok(ExportFormat::Json),
            other => Err(Error::Usage(format!("unsupported graph format {other:?}"))),
        }
    }
}
