use std::collections::{HashMap, VecDeque};
use std::f64::consts::{PI, TAU};

use super::CombinatorialMap;
use crate::error::{Error, Result};

/// Build a map from edges annotated with the direction each end leaves its vertex.
///
/// Edge `k = (u, v, θu, θv)` owns darts `2k` (at `u`) and `2k + 1` (at `v`);
/// darts around a vertex are ordered by increasing angle.
pub(crate) fn from_angles(num_vertices: usize, edges: &[(usize, usize, f64, f64)]) -> CombinatorialMap {
    let mut at: Vec<Vec<(f64, usize)>> = vec![Vec::new(); num_vertices];
    let mut alpha = vec![0; 2 * edges.len()];
    for (k, &(u, v, au, av)) in edges.iter().enumerate() {
        alpha[2 * k] = 2 * k + 1;
        alpha[2 * k + 1] = 2 * k;
        at[u].push((au.rem_euclid(TAU), 2 * k));
        at[v].push((av.rem_euclid(TAU), 2 * k + 1));
    }
    let mut sigma = vec![0; 2 * edges.len()];
    for darts in &mut at {
        darts.sort_by(|a, b| a.0.total_cmp(&b.0));
        for i in 0..darts.len() {
            sigma[darts[i].1] = darts[(i + 1) % darts.len()].1;
        }
    }
    CombinatorialMap::new(alpha, sigma).expect("angle construction yields permutations")
}

/// Build a map of a simple polyhedral graph from its face cycles.
///
/// Faces may be listed in either rotational sense; they are reoriented
/// coherently before darts are assigned.
pub(crate) fn from_faces(faces: &[Vec<usize>]) -> Result<CombinatorialMap> {
    let mut edge_faces: HashMap<(usize, usize), Vec<usize>> = HashMap::new();
    for (f, face) in faces.iter().enumerate() {
        for i in 0..face.len() {
            let (a, b) = (face[i], face[(i + 1) % face.len()]);
            edge_faces.entry((a.min(b), a.max(b))).or_default().push(f);
        }
    }
    if edge_faces.values().any(|fs| fs.len() != 2) {
        return Err(Error::InvalidMap("each edge must border exactly two faces".into()));
    }

    let mut oriented: Vec<Option<Vec<usize>>> = vec![None; faces.len()];
    let mut queue = VecDeque::new();
    oriented[0] = Some(faces[0].clone());
    queue.push_back(0);
    while let Some(f) = queue.pop_front() {
        let face = oriented[f].clone().unwrap();
        for i in 0..face.len() {
            let (a, b) = (face[i], face[(i + 1) % face.len()]);
            for &g in &edge_faces[&(a.min(b), a.max(b))] {
                if g == f || oriented[g].is_some() {
                    continue;
                }
                // the neighbour must traverse the shared edge as b -> a
                let other = &faces[g];
                let pos = other.iter().position(|&x| x == b).unwrap();
                let next = other[(pos + 1) % other.len()];
                let mut cyc = other.clone();
                if next != a {
                    cyc.reverse();
                }
                oriented[g] = Some(cyc);
                queue.push_back(g);
            }
        }
    }
    let faces: Vec<Vec<usize>> = oriented
        .into_iter()
        .map(|f| f.ok_or_else(|| Error::InvalidMap("face graph is disconnected".into())))
        .collect::<Result<_>>()?;

    let mut dart_id: HashMap<(usize, usize), usize> = HashMap::new();
    let mut pred: HashMap<(usize, usize), usize> = HashMap::new();
    for face in &faces {
        for i in 0..face.len() {
            let w = face[(i + face.len() - 1) % face.len()];
            let (u, v) = (face[i], face[(i + 1) % face.len()]);
            let n = dart_id.len();
            if dart_id.insert((u, v), n).is_some() {
                return Err(Error::InvalidMap("faces are not coherently orientable".into()));
            }
            pred.insert((u, v), w);
        }
    }
    let n = dart_id.len();
    let mut alpha = vec![0; n];
    let mut sigma = vec![0; n];
    for (&(u, v), &d) in &dart_id {
        alpha[d] = dart_id[&(v, u)];
        sigma[d] = dart_id[&(u, pred[&(u, v)])];
    }
    CombinatorialMap::new(alpha, sigma)
}

/// One of the five Platonic solids by name.
pub fn platonic(name: &str) -> Result<CombinatorialMap> {
    match name {
        "tetrahedron" => from_faces(&[vec![0, 1, 2], vec![0, 2, 3], vec![0, 3, 1], vec![1, 3, 2]]),
        "cube" | "hexahedron" => from_faces(&[
            vec![0, 1, 3, 2],
            vec![4, 5, 7, 6],
            vec![0, 1, 5, 4],
            vec![2, 3, 7, 6],
            vec![0, 2, 6, 4],
            vec![1, 3, 7, 5],
        ]),
        "octahedron" => {
            let mut faces = Vec::new();
            for x in [0, 1] {
                for y in [2, 3] {
                    for z in [4, 5] {
                        faces.push(vec![x, y, z]);
                    }
                }
            }
            from_faces(&faces)
        }
        "icosahedron" => from_faces(&icosahedron_faces()),
        "dodecahedron" => Ok(super::dual(&from_faces(&icosahedron_faces())?)),
        other => Err(Error::UnknownSolid(other.to_string())),
    }
}

fn icosahedron_faces() -> Vec<Vec<usize>> {
    let (top, bottom) = (0, 11);
    let up = |i: usize| 1 + i % 5;
    let lo = |i: usize| 6 + i % 5;
    let mut faces = Vec::new();
    for i in 0..5 {
        faces.push(vec![top, up(i), up(i + 1)]);
        faces.push(vec![up(i), lo(i), up(i + 1)]);
        faces.push(vec![up(i + 1), lo(i), lo(i + 1)]);
        faces.push(vec![bottom, lo(i + 1), lo(i)]);
    }
    faces
}

/// Ring of `k` vertices on a circle, with ring edges drawn as arcs.
fn ring_edges(k: usize, offset: usize, phase: f64) -> Vec<(usize, usize, f64, f64)> {
    (0..k)
        .map(|i| {
            let a = phase + TAU * i as f64 / k as f64;
            let b = phase + TAU * ((i + 1) % k) as f64 / k as f64;
            (offset + i, offset + (i + 1) % k, a + PI / 2.0, b - PI / 2.0)
        })
        .collect()
}

/// The cycle on `k` vertices; `k = 1` is a single loop and `k = 2` a digon.
pub fn cycle_map(k: usize) -> Result<CombinatorialMap> {
    if k < 1 {
        return Err(Error::BadParameter("cycle needs at least one vertex".into()));
    }
    Ok(from_angles(k, &ring_edges(k, 0, 0.0)))
}

/// Two vertices joined by `edges` parallel edges.
pub fn dipole_map(edges: usize) -> Result<CombinatorialMap> {
    if edges < 2 {
        return Err(Error::BadParameter("dipole needs at least two edges".into()));
    }
    let spread = |j: usize| PI * (j + 1) as f64 / (edges + 1) as f64;
    let list: Vec<_> = (0..edges)
        .map(|j| (0, 1, PI + spread(j), PI - spread(j)))
        .collect();
    Ok(from_angles(2, &list))
}

/// One vertex carrying `loops` non-nested loops.
pub fn bouquet_map(loops: usize) -> Result<CombinatorialMap> {
    if loops < 1 {
        return Err(Error::BadParameter("bouquet needs at least one loop".into()));
    }
    let step = TAU / (2 * loops) as f64;
    let list: Vec<_> = (0..loops)
        .map(|j| (0, 0, step * (2 * j) as f64, step * (2 * j + 1) as f64))
        .collect();
    Ok(from_angles(1, &list))
}

/// Outer `k`-cycle joined to an inner `k`-cycle by spokes (3-regular).
pub fn prism_map(k: usize) -> Result<CombinatorialMap> {
    if k < 3 {
        return Err(Error::BadParameter("prism needs k >= 3".into()));
    }
    let mut edges = ring_edges(k, 0, 0.0);
    edges.extend(ring_edges(k, k, 0.0));
    for i in 0..k {
        let a = TAU * i as f64 / k as f64;
        edges.push((i, k + i, a + PI, a));
    }
    Ok(from_angles(2 * k, &edges))
}

/// One dart of each spoke of [`prism_map`]`(k)`.
pub fn prism_spokes(k: usize) -> Vec<usize> {
    (0..k).map(|i| 2 * (2 * k + i)).collect()
}

/// Outer `k`-cycle joined to a rotated inner `k`-cycle by a zigzag (4-regular).
/// `k = 2` gives the digonal antiprism, a 4-valent multigraph.
pub fn antiprism_map(k: usize) -> Result<CombinatorialMap> {
    if k < 2 {
        return Err(Error::BadParameter("antiprism needs k >= 2".into()));
    }
    let half = PI / k as f64;
    let mut edges = ring_edges(k, 0, 0.0);
    edges.extend(ring_edges(k, k, half));
    // zigzag ends leave between the inward (outward) direction and the ring tangents
    for i in 0..k {
        let outer = TAU * i as f64 / k as f64;
        let prev = (i + k - 1) % k;
        let inner = |j: usize| half + TAU * j as f64 / k as f64;
        edges.push((i, k + i, outer + 0.75 * PI, inner(i) - 0.25 * PI));
        edges.push((i, k + prev, outer + 1.25 * PI, inner(prev) + 0.25 * PI));
    }
    Ok(from_angles(2 * k, &edges))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn vef(m: &CombinatorialMap) -> (usize, usize, usize) {
        (m.num_vertices(), m.num_edges(), m.num_faces())
    }

    #[test]
    fn platonic_euler_data() {
        let expect = [
            ("tetrahedron", (4, 6, 4), 3),
            ("cube", (8, 12, 6), 3),
            ("octahedron", (6, 12, 8), 4),
            ("dodecahedron", (20, 30, 12), 3),
            ("icosahedron", (12, 30, 20), 5),
        ];
        for (name, data, deg) in expect {
            let m = platonic(name).unwrap();
            assert_eq!(vef(&m), data, "{}", name);
            assert!(m.is_regular(deg), "{}", name);
            assert!(m.is_spherical());
        }
        assert!(matches!(platonic("torus"), Err(Error::UnknownSolid(_))));
    }

    #[test]
    fn small_families() {
        let c = cycle_map(5).unwrap();
        assert_eq!(vef(&c), (5, 5, 2));
        assert!(c.is_regular(2));
        let c1 = cycle_map(1).unwrap();
        assert_eq!(vef(&c1), (1, 1, 2));
        let d = dipole_map(4).unwrap();
        assert_eq!(vef(&d), (2, 4, 4));
        assert!(d.is_regular(4));
        let b = bouquet_map(2).unwrap();
        assert_eq!(vef(&b), (1, 2, 3));
        assert!(b.is_regular(4));
        assert!(cycle_map(0).is_err());
        assert!(dipole_map(1).is_err());
        assert!(bouquet_map(0).is_err());
    }

    #[test]
    fn prisms_and_antiprisms() {
        for k in 3..9 {
            let p = prism_map(k).unwrap();
            assert_eq!(vef(&p), (2 * k, 3 * k, k + 2));
            assert!(p.is_regular(3) && p.is_spherical());
        }
        for k in 2..9 {
            let a = antiprism_map(k).unwrap();
            assert_eq!(vef(&a), (2 * k, 4 * k, 2 * k + 2));
            assert!(a.is_regular(4) && a.is_spherical(), "k = {}", k);
        }
        assert_eq!(antiprism_map(3).unwrap().face_vector(), vec![3; 8]);
        assert_eq!(antiprism_map(2).unwrap().face_vector(), vec![2, 2, 3, 3, 3, 3]);
        assert!(prism_map(2).is_err());
        assert!(antiprism_map(1).is_err());
    }
}
