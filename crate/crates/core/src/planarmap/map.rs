use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Embedded multigraph as a pair of dart permutations.
///
/// `alpha` pairs the two darts of each edge; `sigma` cycles the darts around
/// each vertex counterclockwise. Faces are the cycles of `sigma ∘ alpha`.
#[derive(Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "MapRepr", into = "MapRepr")]
pub struct CombinatorialMap {
    alpha: Vec<usize>,
    sigma: Vec<usize>,
    sigma_inv: Vec<usize>,
    vertex_of: Vec<usize>,
    num_vertices: usize,
}

#[derive(Serialize, Deserialize)]
struct MapRepr {
    alpha: Vec<usize>,
    sigma: Vec<usize>,
}

impl TryFrom<MapRepr> for CombinatorialMap {
    type Error = Error;
    fn try_from(r: MapRepr) -> Result<Self> {
        CombinatorialMap::new(r.alpha, r.sigma)
    }
}

impl From<CombinatorialMap> for MapRepr {
    fn from(m: CombinatorialMap) -> Self {
        MapRepr {
            alpha: m.alpha,
            sigma: m.sigma,
        }
    }
}

impl std::fmt::Debug for CombinatorialMap {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("CombinatorialMap")
            .field("V", &self.num_vertices())
            .field("E", &self.num_edges())
            .field("F", &self.num_faces())
            .field("alpha", &self.alpha)
            .field("sigma", &self.sigma)
            .finish()
    }
}

fn check_permutation(p: &[usize], what: &str) -> Result<()> {
    let mut seen = vec![false; p.len()];
    for &x in p {
        if x >= p.len() || std::mem::replace(&mut seen[x], true) {
            return Err(Error::InvalidMap(format!("{} is not a permutation", what)));
        }
    }
    Ok(())
}

/// Cycles of a permutation, each starting at its smallest element, ordered by that element.
pub(crate) fn cycles_of(perm: &[usize]) -> Vec<Vec<usize>> {
    let mut seen = vec![false; perm.len()];
    let mut out = Vec::new();
    for start in 0..perm.len() {
        if seen[start] {
            continue;
        }
        let mut cyc = Vec::new();
        let mut d = start;
        while !seen[d] {
            seen[d] = true;
            cyc.push(d);
            d = perm[d];
        }
        out.push(cyc);
    }
    out
}

impl CombinatorialMap {
    pub fn new(alpha: Vec<usize>, sigma: Vec<usize>) -> Result<Self> {
        if alpha.len() != sigma.len() {
            return Err(Error::InvalidMap("alpha and sigma differ in length".into()));
        }
        check_permutation(&alpha, "alpha")?;
        check_permutation(&sigma, "sigma")?;
        for (d, &a) in alpha.iter().enumerate() {
            if a == d || alpha[a] != d {
                return Err(Error::InvalidMap(
                    "alpha is not a fixed-point-free involution".into(),
                ));
            }
        }
        let mut sigma_inv = vec![0; sigma.len()];
        for (d, &s) in sigma.iter().enumerate() {
            sigma_inv[s] = d;
        }
        let mut vertex_of = vec![usize::MAX; sigma.len()];
        let cycles = cycles_of(&sigma);
        for (v, cyc) in cycles.iter().enumerate() {
            for &d in cyc {
                vertex_of[d] = v;
            }
        }
        Ok(Self {
            alpha,
            sigma,
            sigma_inv,
            vertex_of,
            num_vertices: cycles.len(),
        })
    }

    pub fn empty() -> Self {
        Self::new(vec![], vec![]).unwrap()
    }

    pub fn alpha(&self) -> &[usize] {
        &self.alpha
    }

    pub fn sigma(&self) -> &[usize] {
        &self.sigma
    }

    pub fn sigma_inv(&self) -> &[usize] {
        &self.sigma_inv
    }

    pub fn num_darts(&self) -> usize {
        self.alpha.len()
    }

    pub fn num_vertices(&self) -> usize {
        self.num_vertices
    }

    pub fn num_edges(&self) -> usize {
        self.alpha.len() / 2
    }

    pub fn num_faces(&self) -> usize {
        self.faces().len()
    }

    /// Vertex index of a dart; vertices are numbered by their smallest dart.
    pub fn vertex_of(&self, d: usize) -> usize {
        self.vertex_of[d]
    }

    /// Dart cycles around each vertex, counterclockwise.
    pub fn vertices(&self) -> Vec<Vec<usize>> {
        cycles_of(&self.sigma)
    }

    /// Face boundaries as cycles of `d ↦ sigma(alpha(d))`.
    pub fn faces(&self) -> Vec<Vec<usize>> {
        let phi: Vec<usize> = (0..self.num_darts())
            .map(|d| self.sigma[self.alpha[d]])
            .collect();
        cycles_of(&phi)
    }

    /// Edge representatives: the smaller dart of each pair, ascending.
    pub fn edges(&self) -> Vec<usize> {
        (0..self.num_darts()).filter(|&d| d < self.alpha[d]).collect()
    }

    pub fn edge_rep(&self, d: usize) -> usize {
        d.min(self.alpha[d])
    }

    pub fn degrees(&self) -> Vec<usize> {
        self.vertices().iter().map(Vec::len).collect()
    }

    pub fn is_regular(&self, k: usize) -> bool {
        self.degrees().iter().all(|&d| d == k)
    }

    pub fn is_connected(&self) -> bool {
        self.num_connected_components() <= 1
    }

    pub fn num_connected_components(&self) -> usize {
        let n = self.num_darts();
        let mut seen = vec![false; n];
        let mut count = 0;
        for start in 0..n {
            if seen[start] {
                continue;
            }
            count += 1;
            let mut stack = vec![start];
            seen[start] = true;
            while let Some(d) = stack.pop() {
                for nd in [self.alpha[d], self.sigma[d], self.sigma_inv[d]] {
                    if !seen[nd] {
                        seen[nd] = true;
                        stack.push(nd);
                    }
                }
            }
        }
        count
    }

    pub fn euler_characteristic(&self) -> i64 {
        self.num_vertices() as i64 - self.num_edges() as i64 + self.num_faces() as i64
    }

    /// Every connected component is embedded in a sphere.
    pub fn is_spherical(&self) -> bool {
        self.euler_characteristic() == 2 * self.num_connected_components() as i64
    }

    pub fn ensure_spherical(&self) -> Result<()> {
        if !self.is_connected() {
            return Err(Error::NotConnected);
        }
        if self.num_darts() > 0 && !self.is_spherical() {
            return Err(Error::NotSpherical(format!(
                "V - E + F = {}",
                self.euler_characteristic()
            )));
        }
        Ok(())
    }

    /// Face lengths, sorted ascending.
    pub fn face_vector(&self) -> Vec<usize> {
        let mut v: Vec<usize> = self.faces().iter().map(Vec::len).collect();
        v.sort_unstable();
        v
    }
}
