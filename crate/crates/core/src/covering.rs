//! q-coverings of set families and the shift-class covering of
//! `I^(r)(G[K_m])`.
//!
//! A family `Γ` of subfamilies of `F` is a *q-covering* of `F` when every
//! member of `F` lies in exactly `q` blocks. If some `x` is an r-centre of
//! every block, double counting over `Γ` makes `x` an r-centre of `F`.
//!
//! For the product `G[K_m]` the blocks come from functions `f: V(G) → Z_m`
//! taken up to a constant shift: the block of a class `ψ` is
//! `{X∘f : X ∈ I^(r)(G), f ∈ ψ}` with `X∘f = {(v, f(v)) : v ∈ X}`.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use thiserror::Error;

use crate::ekr::{
    max_anomalous_subfamily, max_intersecting, max_intersecting_subfamily, EkrError, SearchLimits,
};
use crate::graph::{complete_graph, lex_product, Graph, GraphError, VertexSet};
use crate::indep::{independent_r_sets, star_size, SetFamily};

/// Largest `m^n` for which shift classes are enumerated.
pub const MAX_FUNCTIONS: u64 = 1_000_000;

/// Ground families up to this size get the counting identity checked on
/// every subfamily; larger ones on a seeded sample.
const EXHAUSTIVE_IDENTITY: usize = 12;
const IDENTITY_SAMPLES: usize = 256;
const IDENTITY_SEED: u64 = 0x5eed;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CoveringError {
    #[error("block {block} has a member outside the ground family")]
    NotSubfamily { block: usize },
    #[error("m^n = {m}^{n} exceeds the enumeration budget")]
    Budget { n: usize, m: usize },
    #[error("modulus must be at least 1")]
    ZeroModulus,
    #[error("vertex {v} is not an r-centre of the base graph")]
    NotACentre { v: usize },
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error(transparent)]
    Ekr(#[from] EkrError),
    #[error("constructed covering failed verification: {0}")]
    Verification(CoveringFailure),
}

/// Why a covering is not a q-covering.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CoveringFailure {
    #[error("the ground family is empty, so q is undetermined")]
    EmptyGround,
    #[error("member {member:?} lies in {count} blocks, expected {expected}")]
    Multiplicity {
        member: VertexSet,
        count: usize,
        expected: usize,
    },
    #[error("q·|A| = {lhs} but Σ|A∩G| = {rhs} for a subfamily of size {size}")]
    Identity { size: usize, lhs: usize, rhs: usize },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Covering {
    ground: SetFamily,
    blocks: Vec<SetFamily>,
    q: Option<usize>,
}

impl Covering {
    pub fn new(ground: SetFamily, blocks: Vec<SetFamily>) -> Result<Self, CoveringError> {
        if let Some(block) = blocks.iter().position(|b| !b.is_subfamily_of(&ground)) {
            return Err(CoveringError::NotSubfamily { block });
        }
        Ok(Covering {
            ground,
            blocks,
            q: None,
        })
    }

    pub fn ground(&self) -> &SetFamily {
        &self.ground
    }

    pub fn blocks(&self) -> &[SetFamily] {
        &self.blocks
    }

    /// The multiplicity, once [`Covering::verified`] has established it.
    pub fn q(&self) -> Option<usize> {
        self.q
    }

    /// Runs [`verify_q_covering`] and records `q`.
    pub fn verified(mut self) -> Result<Self, CoveringFailure> {
        self.q = Some(verify_q_covering(&self)?);
        Ok(self)
    }
}

/// The common multiplicity of the ground members in the blocks.
///
/// Also checks `q·|A| = Σ_G |A ∩ G|` on subfamilies `A` of the ground:
/// all of them for small grounds, a seeded sample otherwise.
pub fn verify_q_covering(c: &Covering) -> Result<usize, CoveringFailure> {
    let ground = c.ground.members();
    if ground.is_empty() {
        return Err(CoveringFailure::EmptyGround);
    }
    let count = |a: &VertexSet| c.blocks.iter().filter(|b| b.contains(*a)).count();
    let q = count(&ground[0]);
    for a in ground {
        let k = count(a);
        if k != q {
            return Err(CoveringFailure::Multiplicity {
                member: *a,
                count: k,
                expected: q,
            });
        }
    }
    let identity = |sub: &[VertexSet]| {
        let lhs = q * sub.len();
        let rhs: usize = c
            .blocks
            .iter()
            .map(|b| sub.iter().filter(|a| b.contains(**a)).count())
            .sum();
        if lhs == rhs {
            Ok(())
        } else {
            Err(CoveringFailure::Identity {
                size: sub.len(),
                lhs,
                rhs,
            })
        }
    };
    let pick = |mask: &dyn Fn(usize) -> bool| -> Vec<VertexSet> {
        ground
            .iter()
            .enumerate()
            .filter(|(i, _)| mask(*i))
            .map(|(_, a)| *a)
            .collect()
    };
    if ground.len() <= EXHAUSTIVE_IDENTITY {
        for mask in 0u32..1 << ground.len() {
            identity(&pick(&|i| mask >> i & 1 == 1))?;
        }
    } else {
        let mut rng = ChaCha8Rng::seed_from_u64(IDENTITY_SEED);
        for _ in 0..IDENTITY_SAMPLES {
            let keep: Vec<bool> = (0..ground.len()).map(|_| rng.gen_bool(0.5)).collect();
            identity(&pick(&|i| keep[i]))?;
        }
    }
    Ok(q)
}

/// A class of functions `[n] → Z_m` up to adding a constant, represented by
/// its member with `f(0) = 0`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct ShiftClass {
    m: usize,
    representative: Vec<usize>,
}

impl ShiftClass {
    pub fn representative(&self) -> &[usize] {
        &self.representative
    }

    /// The `m` functions of the class, shift 0 first.
    pub fn functions(&self) -> impl Iterator<Item = Vec<usize>> + '_ {
        (0..self.m).map(move |z| {
            self.representative
                .iter()
                .map(|&d| (d + z) % self.m)
                .collect()
        })
    }

    /// Representative as a digit string, e.g. `"0210"`.
    pub fn digits(&self) -> String {
        self.representative
            .iter()
            .map(|d| char::from_digit(*d as u32, 36).unwrap_or('?'))
            .collect()
    }
}

/// `X∘f` as a vertex set of `G[K_m]` (vertex `(v, x)` has index `v·m + x`).
pub fn compose(x: VertexSet, f: &[usize], m: usize) -> VertexSet {
    x.iter().map(|v| v * m + f[v]).collect()
}

/// All `m^{n−1}` shift classes, in lexicographic order of representatives.
pub fn shift_classes(n: usize, m: usize) -> Result<Vec<ShiftClass>, CoveringError> {
    if m == 0 {
        return Err(CoveringError::ZeroModulus);
    }
    if (m as u64)
        .checked_pow(n as u32)
        .is_none_or(|total| total > MAX_FUNCTIONS)
    {
        return Err(CoveringError::Budget { n, m });
    }
    if n == 0 {
        return Ok(vec![ShiftClass {
            m,
            representative: Vec::new(),
        }]);
    }
    let mut out = Vec::new();
    let mut digits = vec![0usize; n];
    loop {
        out.push(ShiftClass {
            m,
            representative: digits.clone(),
        });
        // Odometer over positions 1..n, position 0 pinned to 0.
        let mut k = n - 1;
        loop {
            if k == 0 {
                return Ok(out);
            }
            digits[k] += 1;
            if digits[k] < m {
                break;
            }
            digits[k] = 0;
            k -= 1;
        }
    }
}

/// The shift-class covering of `I^(r)(G[K_m])`, verified, with blocks in
/// the order of [`shift_classes`].
pub fn katona_covering(g: &Graph, m: usize, r: usize) -> Result<Covering, CoveringError> {
    let classes = shift_classes(g.order(), m)?;
    let product = lex_product(g, &complete_graph(m)?)?;
    let ground = independent_r_sets(&product, r);
    let base = independent_r_sets(g, r);
    let blocks = classes
        .iter()
        .map(|psi| {
            SetFamily::new(
                base.iter()
                    .flat_map(|&x| psi.functions().map(move |f| compose(x, &f, m))),
            )
        })
        .collect();
    Covering::new(ground, blocks)?
        .verified()
        .map_err(CoveringError::Verification)
}

/// Whether every `(v, x)` is an r-centre of `G[K_m]`, given that `v` is one
/// of `G`.
pub fn centre_transfer_check(
    g: &Graph,
    v: usize,
    m: usize,
    r: usize,
    limits: SearchLimits,
) -> Result<bool, CoveringError> {
    if m == 0 {
        return Err(CoveringError::ZeroModulus);
    }
    if !crate::ekr::is_r_centre(g, v, r, limits)? {
        return Err(CoveringError::NotACentre { v });
    }
    let product = lex_product(g, &complete_graph(m)?)?;
    let best = max_intersecting(&product, r, limits)?.size as u64;
    Ok((0..m).all(|x| star_size(&product, v * m + x, r) >= best))
}

/// The faces of the octahedron `K_{2,2,2}` (opposite pairs `{0,1}`, `{2,3}`,
/// `{4,5}`); faces `2k` and `2k+1` are opposite.
pub const OCTAHEDRON_FACES: [[usize; 3]; 8] = [
    [0, 2, 4],
    [1, 3, 5],
    [0, 2, 5],
    [1, 3, 4],
    [0, 3, 4],
    [1, 2, 5],
    [0, 3, 5],
    [1, 2, 4],
];

/// Findings on the octahedron face family `F` and its partition into
/// opposite pairs.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OctahedronCase {
    pub faces: SetFamily,
    pub partition: Covering,
    /// `|F_x|` for each vertex.
    pub star_sizes: Vec<usize>,
    /// Every vertex is a strict 3-centre of every block.
    pub strict_centre_of_blocks: bool,
    /// Every vertex is a 3-centre of `F`.
    pub centre_of_faces: bool,
    pub max_intersecting: usize,
    pub max_anomalous: Option<usize>,
    /// Faces with at least two vertices in face 0.
    pub two_of_a_face: SetFamily,
    /// Every vertex is a strict 3-centre of `F`.
    pub strict_centre_of_faces: bool,
}

/// A 1-covering whose blocks all have strict centres, while `F` itself has
/// anomalous subfamilies as large as its stars.
pub fn octahedron_remark_case() -> OctahedronCase {
    let set = |f: &[usize; 3]| f.iter().copied().collect::<VertexSet>();
    let faces = SetFamily::new(OCTAHEDRON_FACES.iter().map(set));
    let blocks: Vec<SetFamily> = OCTAHEDRON_FACES
        .chunks(2)
        .map(|pair| SetFamily::new(pair.iter().map(set)))
        .collect();
    let partition = Covering::new(faces.clone(), blocks)
        .expect("blocks are faces")
        .verified()
        .expect("a partition");
    let limits = SearchLimits::default();
    let max = |f: &SetFamily| {
        max_intersecting_subfamily(f, limits)
            .expect("tiny family")
            .size
    };
    let max_anom = |f: &SetFamily| {
        max_anomalous_subfamily(f, limits)
            .expect("tiny family")
            .map(|a| a.size)
    };
    let strict_centre_of_blocks = partition.blocks().iter().all(|b| {
        let anom = max_anom(b);
        (0..6).all(|x| anom.is_none_or(|a| b.containing(x).len() > a))
    });
    let star_sizes: Vec<usize> = (0..6).map(|x| faces.containing(x).len()).collect();
    let max_intersecting = max(&faces);
    let max_anomalous = max_anom(&faces);
    let first = faces.members()[0];
    let two_of_a_face = SetFamily::new(
        faces
            .iter()
            .copied()
            .filter(|f| f.intersection(first).len() >= 2),
    );
    OctahedronCase {
        centre_of_faces: star_sizes.iter().all(|&s| s >= max_intersecting),
        strict_centre_of_faces: star_sizes
            .iter()
            .all(|&s| max_anomalous.is_none_or(|a| s > a)),
        faces,
        partition,
        star_sizes,
        strict_centre_of_blocks,
        max_intersecting,
        max_anomalous,
        two_of_a_face,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ekr::{common_intersection, is_intersecting};
    use crate::graph::empty_graph;
    use crate::named::{cycle_graph, octahedron, path_graph};

    fn set(v: &[usize]) -> VertexSet {
        v.iter().copied().collect()
    }

    #[test]
    fn trivial_coverings() {
        let f = SetFamily::new([set(&[0, 1]), set(&[1, 2]), set(&[2, 3])]);
        let halves = vec![
            SetFamily::new([set(&[0, 1])]),
            SetFamily::new([set(&[1, 2]), set(&[2, 3])]),
        ];
        assert_eq!(
            verify_q_covering(&Covering::new(f.clone(), halves).unwrap()),
            Ok(1)
        );
        assert_eq!(
            verify_q_covering(&Covering::new(f.clone(), vec![f.clone(), f.clone()]).unwrap()),
            Ok(2)
        );
        let uneven =
            Covering::new(f.clone(), vec![f.clone(), SetFamily::new([set(&[0, 1])])]).unwrap();
        assert!(matches!(
            verify_q_covering(&uneven),
            Err(CoveringFailure::Multiplicity {
                count: 1,
                expected: 2,
                ..
            })
        ));
        assert_eq!(
            Covering::new(f, vec![SetFamily::new([set(&[5])])]),
            Err(CoveringError::NotSubfamily { block: 0 })
        );
        let empty = Covering::new(SetFamily::default(), vec![]).unwrap();
        assert_eq!(verify_q_covering(&empty), Err(CoveringFailure::EmptyGround));
    }

    #[test]
    fn classes() {
        let c = shift_classes(3, 2).unwrap();
        assert_eq!(c.len(), 4);
        assert_eq!(c[1].digits(), "001");
        let fs: Vec<Vec<usize>> = c[1].functions().collect();
        assert_eq!(fs, vec![vec![0, 0, 1], vec![1, 1, 0]]);
        assert_eq!(shift_classes(4, 3).unwrap().len(), 27);
        assert_eq!(shift_classes(3, 0), Err(CoveringError::ZeroModulus));
        assert_eq!(
            shift_classes(21, 2),
            Err(CoveringError::Budget { n: 21, m: 2 })
        );
        assert_eq!(shift_classes(5, 1).unwrap().len(), 1);
    }

    #[test]
    fn katona_instances() {
        for (g, m, r, blocks, q) in [
            (path_graph(3).unwrap(), 2, 2, 4, 2),
            (empty_graph(2).unwrap(), 3, 1, 3, 3),
        ] {
            let c = katona_covering(&g, m, r).unwrap();
            assert_eq!((c.blocks().len(), c.q()), (blocks, Some(q)));
            for b in c.blocks() {
                for v in 0..g.order() {
                    for x in 0..m {
                        assert_eq!(b.containing(v * m + x).len() as u64, star_size(&g, v, r));
                    }
                }
            }
        }
        let c = katona_covering(&cycle_graph(5).unwrap(), 2, 2).unwrap();
        assert_eq!(c.q(), Some(8));
        // m = 1: a single block equal to the ground.
        let c = katona_covering(&path_graph(4).unwrap(), 1, 2).unwrap();
        assert_eq!(c.blocks(), &[c.ground().clone()]);
    }

    #[test]
    fn centre_transfer() {
        let lim = SearchLimits::default();
        assert!(centre_transfer_check(&empty_graph(4).unwrap(), 0, 2, 2, lim).unwrap());
        assert!(centre_transfer_check(&path_graph(4).unwrap(), 0, 2, 2, lim).unwrap());
        assert!(centre_transfer_check(&cycle_graph(5).unwrap(), 0, 3, 2, lim).unwrap());
        // The middle of P_3 lies in no independent 2-set.
        assert_eq!(
            centre_transfer_check(&path_graph(3).unwrap(), 1, 2, 2, lim),
            Err(CoveringError::NotACentre { v: 1 })
        );
    }

    #[test]
    fn octahedron_case() {
        let g = octahedron();
        for f in OCTAHEDRON_FACES {
            assert!(g.adjacent(f[0], f[1]) && g.adjacent(f[1], f[2]) && g.adjacent(f[0], f[2]));
        }
        for pair in OCTAHEDRON_FACES.chunks(2) {
            assert!(!set(&pair[0]).meets(set(&pair[1])));
        }
        let c = octahedron_remark_case();
        assert_eq!(c.faces.len(), 8);
        assert_eq!(c.partition.q(), Some(1));
        assert_eq!(c.star_sizes, vec![4; 6]);
        assert!(c.strict_centre_of_blocks && c.centre_of_faces && !c.strict_centre_of_faces);
        assert_eq!((c.max_intersecting, c.max_anomalous), (4, Some(4)));
        assert_eq!(c.two_of_a_face.len(), 4);
        assert!(is_intersecting(&c.two_of_a_face));
        assert!(common_intersection(&c.two_of_a_face).unwrap().is_empty());
    }
}
