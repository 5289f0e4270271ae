//! The degree class group: multidegrees of total degree zero modulo the
//! lattice spanned by the columns of the intersection matrix.

use std::fmt;

use crate::error::{Error, Result};
use crate::graph::{VertexSet, WeightedGraph};
use crate::lattice::{hermite_rows, reduce_mod_hermite, smith_diagonal, Matrix};

/// Integer degree per vertex.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Multidegree(pub Vec<i64>);

impl Multidegree {
    pub fn new(values: Vec<i64>) -> Self {
        Multidegree(values)
    }

    pub fn total(&self) -> i64 {
        self.0.iter().sum()
    }

    /// Degree on a subcurve: the sum over its vertices.
    pub fn on(&self, set: VertexSet) -> i64 {
        set.iter().map(|v| self.0[v]).sum()
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn values(&self) -> &[i64] {
        &self.0
    }
}

impl fmt::Debug for Multidegree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, x) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{x}")?;
        }
        write!(f, ")")
    }
}

impl From<Vec<i64>> for Multidegree {
    fn from(v: Vec<i64>) -> Self {
        Multidegree(v)
    }
}

/// `k[i][j]` counts edges between distinct `i` and `j`; the diagonal makes
/// each row sum to zero. Loops never contribute.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IntersectionMatrix(pub Matrix);

pub fn intersection_matrix(g: &WeightedGraph) -> IntersectionMatrix {
    let n = g.num_vertices();
    let mut k = vec![vec![0i64; n]; n];
    for &(a, b) in g.edges() {
        if a != b {
            k[a][b] += 1;
            k[b][a] += 1;
            k[a][a] -= 1;
            k[b][b] -= 1;
        }
    }
    IntersectionMatrix(k)
}

/// Canonical coordinates of a multidegree class.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ClassKey {
    pub total: i64,
    pub residue: Vec<i64>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClassGroup {
    /// Smith invariant factors greater than one.
    pub invariant_factors: Vec<i64>,
    pub order: i64,
    vertices: usize,
    /// Hermite basis of the twist lattice, written in the first
    /// `vertices - 1` coordinates of the degree-zero sublattice.
    hermite: Matrix,
}

impl ClassGroup {
    pub fn num_vertices(&self) -> usize {
        self.vertices
    }

    /// Diagonal of the Hermite basis; residues range over the box it spans.
    pub fn box_sides(&self) -> Vec<i64> {
        (0..self.hermite.len()).map(|i| self.hermite[i][i]).collect()
    }

    fn check_len(&self, d: &Multidegree) -> Result<()> {
        if d.len() != self.vertices {
            return Err(Error::LengthMismatch {
                expected: self.vertices,
                got: d.len(),
            });
        }
        Ok(())
    }

    /// Two multidegrees get equal keys iff they have the same total and
    /// differ by an element of the twist lattice.
    pub fn canonicalize(&self, d: &Multidegree) -> Result<ClassKey> {
        self.check_len(d)?;
        let residue = reduce_mod_hermite(&self.hermite, &d.0[..self.vertices - 1])?;
        Ok(ClassKey {
            total: d.total(),
            residue,
        })
    }

    pub fn same_class(&self, d1: &Multidegree, d2: &Multidegree) -> Result<bool> {
        if d1.total() != d2.total() {
            return Err(Error::DegreeMismatch(d1.total(), d2.total()));
        }
        Ok(self.canonicalize(d1)? == self.canonicalize(d2)?)
    }

    /// One multidegree of total `d` per class: the reduced residues, with the
    /// last vertex absorbing the remaining degree. Lexicographic order.
    pub fn representatives(&self, d: i64) -> Vec<Multidegree> {
        let sides = self.box_sides();
        let mut out = Vec::with_capacity(self.order as usize);
        let mut cur = vec![0i64; sides.len()];
        loop {
            let mut v = cur.clone();
            v.push(d - cur.iter().sum::<i64>());
            out.push(Multidegree(v));
            // Odometer increment, last coordinate fastest.
            let mut i = sides.len();
            loop {
                if i == 0 {
                    return out;
                }
                i -= 1;
                cur[i] += 1;
                if cur[i] < sides[i] {
                    break;
                }
                cur[i] = 0;
            }
        }
    }
}

/// Reduced Laplacian: the intersection matrix with the last row and column
/// removed, negated.
fn reduced_laplacian(g: &WeightedGraph) -> Matrix {
    let k = intersection_matrix(g).0;
    let n = g.num_vertices();
    (0..n - 1)
        .map(|i| (0..n - 1).map(|j| -k[i][j]).collect())
        .collect()
}

pub fn class_group(g: &WeightedGraph) -> Result<ClassGroup> {
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }
    let reduced = reduced_laplacian(g);
    let diag = smith_diagonal(&reduced)?;
    let order = diag
        .iter()
        .try_fold(1i64, |acc, &x| acc.checked_mul(x))
        .ok_or(Error::Overflow)?;
    let hermite = if reduced.is_empty() {
        Vec::new()
    } else {
        hermite_rows(&reduced)?
    };
    Ok(ClassGroup {
        invariant_factors: diag.into_iter().filter(|&x| x > 1).collect(),
        order,
        vertices: g.num_vertices(),
        hermite,
    })
}

pub fn same_class(g: &WeightedGraph, d1: &Multidegree, d2: &Multidegree) -> Result<bool> {
    class_group(g)?.same_class(d1, d2)
}

pub fn class_representatives(g: &WeightedGraph, d: i64) -> Result<Vec<Multidegree>> {
    Ok(class_group(g)?.representatives(d))
}
