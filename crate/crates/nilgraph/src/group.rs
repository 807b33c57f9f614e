//! Finitely generated torsion-free 2-step nilpotent groups presented by
//! structure constants: normal-form arithmetic, structural subgroups, and
//! the constructor from an edge-weighted graph.

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::graph::Orders;
use crate::matrix::IntMatrix;
use crate::scalar::{Int, Rat};
use crate::snf::{smith_normal_form, Lattice};
use crate::weighted::WeightedGraph;

/// Presentation with non-central generators x_1..x_n, central generators
/// y_1..y_m and relations [x_i, x_j] = prod_l y_l^{c_{ij,l}} for i < j; the
/// y's commute with everything. The commutator convention is
/// [x, y] = x^-1 y^-1 x y.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TwoStepPresentation {
    n: usize,
    m: usize,
    /// Row per ordered pair (i, j) with i < j, in lexicographic pair order;
    /// m columns.
    c: IntMatrix,
}

/// Normal form prod x_i^{z_i} * prod y_l^{t_l}.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GroupElement {
    pub z: Vec<Int>,
    pub t: Vec<Int>,
}

impl GroupElement {
    pub fn from_i64(z: &[i64], t: &[i64]) -> Self {
        GroupElement {
            z: z.iter().map(|&v| Int::from(v)).collect(),
            t: t.iter().map(|&v| Int::from(v)).collect(),
        }
    }

    pub fn is_identity(&self) -> bool {
        self.z.iter().all(Zero::is_zero) && self.t.iter().all(Zero::is_zero)
    }
}

/// Index of the pair (i, j), i < j, in lexicographic order.
pub fn pair_index(n: usize, i: usize, j: usize) -> usize {
    debug_assert!(i < j && j < n);
    i * n - i * (i + 1) / 2 + (j - i - 1)
}

pub fn pair_count(n: usize) -> usize {
    n * (n - 1) / 2
}

impl TwoStepPresentation {
    pub fn new(n: usize, m: usize, c: IntMatrix) -> Result<Self> {
        if c.rows() != pair_count(n) || c.cols() != m {
            return Err(Error::DimensionMismatch(format!(
                "structure constants must be {}x{m}, got {}x{}",
                pair_count(n),
                c.rows(),
                c.cols()
            )));
        }
        Ok(TwoStepPresentation { n, m, c })
    }

    /// Free abelian group of rank n (no central generators).
    pub fn free_abelian(n: usize) -> Self {
        TwoStepPresentation {
            n,
            m: 0,
            c: IntMatrix::zeros(pair_count(n), 0),
        }
    }

    pub fn from_sparse(n: usize, m: usize, entries: &[(usize, usize, usize, i64)]) -> Result<Self> {
        let mut c = IntMatrix::zeros(pair_count(n), m);
        for &(i, j, l, v) in entries {
            if i >= j || j >= n || l >= m {
                return Err(Error::IndexOutOfRange(format!(
                    "structure constant c[{i},{j},{l}]"
                )));
            }
            c.set(pair_index(n, i, j), l, Int::from(v));
        }
        TwoStepPresentation::new(n, m, c)
    }

    pub fn rank_x(&self) -> usize {
        self.n
    }

    pub fn rank_y(&self) -> usize {
        self.m
    }

    pub fn structure_constants(&self) -> &IntMatrix {
        &self.c
    }

    /// Exponent vector of [x_i, x_j] for i < j.
    pub fn commutator_exponents(&self, i: usize, j: usize) -> Vec<Int> {
        self.c.row(pair_index(self.n, i, j))
    }

    pub fn identity(&self) -> GroupElement {
        GroupElement {
            z: vec![Int::zero(); self.n],
            t: vec![Int::zero(); self.m],
        }
    }

    pub fn x_generator(&self, i: usize) -> GroupElement {
        let mut e = self.identity();
        e.z[i] = Int::one();
        e
    }

    pub fn y_generator(&self, l: usize) -> GroupElement {
        let mut e = self.identity();
        e.t[l] = Int::one();
        e
    }

    fn check_dims(&self, a: &GroupElement) -> Result<()> {
        if a.z.len() != self.n || a.t.len() != self.m {
            return Err(Error::DimensionMismatch(format!(
                "element has shape ({}, {}), presentation needs ({}, {})",
                a.z.len(),
                a.t.len(),
                self.n,
                self.m
            )));
        }
        Ok(())
    }

    /// Central correction picked up when the normal form of `a` passes the
    /// normal form of `b`: collecting x_i^{a_i} (i > j) past x_j^{b_j} emits
    /// [x_i, x_j]^{a_i b_j} = [x_j, x_i]^{-a_i b_j}.
    fn collection_term(&self, az: &[Int], bz: &[Int]) -> Vec<Int> {
        let mut delta = vec![Int::zero(); self.m];
        for j in 0..self.n {
            if bz[j].is_zero() {
                continue;
            }
            for i in j + 1..self.n {
                if az[i].is_zero() {
                    continue;
                }
                let coeff = -(&az[i] * &bz[j]);
                let row = pair_index(self.n, j, i);
                for l in 0..self.m {
                    delta[l] += &coeff * self.c.get(row, l);
                }
            }
        }
        delta
    }

    /// Normal form of a * b.
    pub fn multiply(&self, a: &GroupElement, b: &GroupElement) -> Result<GroupElement> {
        self.check_dims(a)?;
        self.check_dims(b)?;
        let z: Vec<Int> = a.z.iter().zip(&b.z).map(|(x, y)| x + y).collect();
        let delta = self.collection_term(&a.z, &b.z);
        let t: Vec<Int> = a
            .t
            .iter()
            .zip(&b.t)
            .zip(delta)
            .map(|((x, y), d)| x + y + d)
            .collect();
        Ok(GroupElement { z, t })
    }

    pub fn inverse(&self, a: &GroupElement) -> Result<GroupElement> {
        self.check_dims(a)?;
        let z: Vec<Int> = a.z.iter().map(|v| -v.clone()).collect();
        let delta = self.collection_term(&a.z, &a.z);
        let t: Vec<Int> = a
            .t
            .iter()
            .zip(delta)
            .map(|(x, d)| -(x.clone()) + d)
            .collect();
        Ok(GroupElement { z, t })
    }

    pub fn power(&self, a: &GroupElement, e: i64) -> Result<GroupElement> {
        let (mut base, mut e) = if e < 0 {
            (self.inverse(a)?, (-e) as u64)
        } else {
            (a.clone(), e as u64)
        };
        let mut acc = self.identity();
        while e > 0 {
            if e & 1 == 1 {
                acc = self.multiply(&acc, &base)?;
            }
            base = self.multiply(&base, &base)?;
            e >>= 1;
        }
        Ok(acc)
    }

    /// [a, b] = a^-1 b^-1 a b, computed through the multiplication chain.
    pub fn commutator(&self, a: &GroupElement, b: &GroupElement) -> Result<GroupElement> {
        let ai = self.inverse(a)?;
        let bi = self.inverse(b)?;
        let mut acc = self.multiply(&ai, &bi)?;
        acc = self.multiply(&acc, a)?;
        self.multiply(&acc, b)
    }
}

/// Presentation of the group of an edge-weighted graph: x-generators are the
/// vertices in the admissible order, y-generators the edges in the
/// admissible order, and [v, w] = e^{k(e)} for each edge e = {v, w}, v < w.
pub fn presentation_from_graph(wg: &WeightedGraph, orders: &Orders) -> TwoStepPresentation {
    let n = wg.graph.vertex_count();
    let m = wg.graph.edge_count();
    let mut c = IntMatrix::zeros(pair_count(n), m);
    for e in 0..m {
        let (v, w) = orders.oriented_edge(&wg.graph, e);
        let (i, j) = (orders.vertex_pos[v], orders.vertex_pos[w]);
        c.set(
            pair_index(n, i.min(j), i.max(j)),
            orders.edge_pos[e],
            Int::from(wg.weight(e)),
        );
    }
    TwoStepPresentation { n, m, c }
}

/// The seven-generator group on x_1..x_4, y_1..y_3 whose graded Lie algebra
/// becomes isomorphic to that of the path on four vertices only after
/// extending scalars to Q(sqrt(2)).
pub fn group_h() -> TwoStepPresentation {
    // [x1,x3]=y1, [x1,x4]=y2, [x3,x4]=y3, [x2,x4]=y1^2, [x2,x3]=y2, [x1,x2]=1
    TwoStepPresentation::from_sparse(
        4,
        3,
        &[
            (0, 2, 0, 1),
            (0, 3, 1, 1),
            (2, 3, 2, 1),
            (1, 3, 0, 2),
            (1, 2, 1, 1),
        ],
    )
    .expect("valid sparse data")
}

/// The explicit automorphism of `group_h` with finite twisted-conjugacy
/// class count: matrices of its action on the x-span and the y-span
/// (columns are generator images).
pub fn group_h_automorphism() -> (IntMatrix, IntMatrix) {
    // x1 -> x1^-1 x2, x2 -> x1^2 x2^-1, x3 -> x3^-1 x4, x4 -> x3^2 x4^-1
    let b = IntMatrix::from_i64(&[
        &[-1, 2, 0, 0],
        &[1, -1, 0, 0],
        &[0, 0, -1, 2],
        &[0, 0, 1, -1],
    ]);
    // y1 -> y1^3 y2^-2, y2 -> y1^-4 y2^3, y3 -> y3^-1
    let c = IntMatrix::from_i64(&[&[3, -4, 0], &[-2, 3, 0], &[0, 0, -1]]);
    (b, c)
}

/// Check that x_i -> prod x^{B column i}, y_l -> prod y^{C column l} defines
/// an automorphism: B and C unimodular and every defining relation is
/// preserved, i.e. [phi(x_i), phi(x_j)] = phi([x_i, x_j]) for all i < j.
pub fn check_presentation_automorphism(
    p: &TwoStepPresentation,
    b: &IntMatrix,
    c: &IntMatrix,
) -> Result<()> {
    if b.rows() != p.n || b.cols() != p.n || c.rows() != p.m || c.cols() != p.m {
        return Err(Error::DimensionMismatch(
            "automorphism matrices must be n x n and m x m".into(),
        ));
    }
    if !b.is_unimodular()? {
        return Err(Error::NotUnimodular(b.det()?.to_string()));
    }
    if !c.is_unimodular()? {
        return Err(Error::NotUnimodular(c.det()?.to_string()));
    }
    for i in 0..p.n {
        for j in i + 1..p.n {
            let mut lhs = vec![Int::zero(); p.m];
            for k in 0..p.n {
                for l in k + 1..p.n {
                    let minor = b.get(k, i) * b.get(l, j) - b.get(l, i) * b.get(k, j);
                    if minor.is_zero() {
                        continue;
                    }
                    let row = pair_index(p.n, k, l);
                    for col in 0..p.m {
                        lhs[col] += &minor * p.c.get(row, col);
                    }
                }
            }
            let rhs = c.mul_vec(&p.commutator_exponents(i, j))?;
            if lhs != rhs {
                return Err(Error::InvalidInput(format!(
                    "relation [x_{}, x_{}] is not preserved",
                    i + 1,
                    j + 1
                )));
            }
        }
    }
    Ok(())
}

/// Structural data of a presentation: center, commutator lattice and its
/// isolator, abelianization invariants, Hirsch number.
#[derive(Clone, Debug)]
pub struct StructureReport {
    /// Central generators: all y's plus the x-directions commuting with
    /// everything.
    pub center_generators: Vec<GroupElement>,
    pub center_rank: usize,
    /// Lattice of gamma_2 inside the y-span.
    pub gamma2_lattice: Lattice,
    /// Its saturation (the isolator sqrt(gamma_2)).
    pub sqrt_gamma2_lattice: Lattice,
    /// Index of gamma_2 in sqrt(gamma_2).
    pub gamma2_index_in_sqrt: Int,
    pub abelianization_free_rank: usize,
    /// Invariant factors > 1 of the torsion part, in divisibility order.
    pub abelianization_torsion: Vec<Int>,
    pub hirsch: usize,
    /// For graph-built groups: product of the edge weights, the index of the
    /// unweighted group inside this one.
    pub unweighted_index: Option<Int>,
}

/// Compute the structural subgroups of a presentation. When `origin` is
/// given, the closed-form answers for graph-built groups are attached.
pub fn structural_subgroups(
    p: &TwoStepPresentation,
    origin: Option<&WeightedGraph>,
) -> Result<StructureReport> {
    let gamma2_lattice = Lattice::from_rows(&p.c);
    let sqrt_gamma2_lattice = gamma2_lattice.saturation();
    let gamma2_index_in_sqrt = gamma2_lattice.index_in(&sqrt_gamma2_lattice)?;

    let snf = smith_normal_form(&p.c);
    let rank = snf.rank();
    let abelianization_free_rank = p.n + p.m - rank;
    let abelianization_torsion: Vec<Int> = snf
        .diagonal()
        .into_iter()
        .filter(|d| !d.is_zero() && !d.is_one())
        .collect();

    // an x-combination z is central iff sum_i z_i c~_{ij,l} = 0 for all j, l
    // where c~ is the signed pairing (c for i<j, -c for i>j)
    let mut constraints = Vec::new();
    for j in 0..p.n {
        for l in 0..p.m {
            let mut row = vec![Rat::zero(); p.n];
            for i in 0..p.n {
                if i == j {
                    continue;
                }
                let v = if i < j {
                    p.c.get(pair_index(p.n, i, j), l).clone()
                } else {
                    -p.c.get(pair_index(p.n, j, i), l).clone()
                };
                row[i] = Rat::from_integer(v);
            }
            constraints.push(row);
        }
    }
    let kernel = if constraints.is_empty() {
        // no central generators: every x-direction is central
        (0..p.n)
            .map(|i| {
                let mut v = vec![Rat::zero(); p.n];
                v[i] = Rat::one();
                v
            })
            .collect()
    } else {
        crate::matrix::Matrix::from_rows(constraints)?.kernel()
    };
    let kernel_int: Vec<Vec<Int>> = kernel.iter().map(|v| clear_denominators(v)).collect();
    let kernel_lattice = if kernel_int.is_empty() {
        None
    } else {
        Some(Lattice::from_rows(&IntMatrix::from_rows(kernel_int)?))
    };

    let mut center_generators: Vec<GroupElement> = Vec::new();
    if let Some(lat) = &kernel_lattice {
        for i in 0..lat.basis().rows() {
            center_generators.push(GroupElement {
                z: lat.basis().row(i),
                t: vec![Int::zero(); p.m],
            });
        }
    }
    for l in 0..p.m {
        center_generators.push(p.y_generator(l));
    }
    let center_rank = center_generators.len();

    let unweighted_index = origin.map(|wg| wg.weight_product());

    Ok(StructureReport {
        center_generators,
        center_rank,
        gamma2_lattice,
        sqrt_gamma2_lattice,
        gamma2_index_in_sqrt,
        abelianization_free_rank,
        abelianization_torsion,
        hirsch: p.n + p.m,
        unweighted_index,
    })
}

/// Scale a rational vector to a primitive integer vector.
fn clear_denominators(v: &[Rat]) -> Vec<Int> {
    let mut lcm = Int::one();
    for x in v {
        lcm = num_integer::lcm(lcm, x.denom().clone());
    }
    let ints: Vec<Int> = v.iter().map(|x| (x * Rat::from_integer(lcm.clone())).to_integer()).collect();
    let mut g = Int::zero();
    for x in &ints {
        g = num_integer::gcd(g, x.clone());
    }
    if g.is_zero() || g.is_one() {
        return ints;
    }
    ints.into_iter().map(|x| x / &g).collect()
}

/// Closed-form structural answers for a graph-built group, derived directly
/// from the graph combinatorics. Independent of `structural_subgroups`;
/// the two paths are compared in tests.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GraphStructure {
    pub center_rank: usize,
    pub abelianization_free_rank: usize,
    pub abelianization_torsion: Vec<Int>,
    pub hirsch: usize,
    pub index: Int,
}

pub fn graph_structure_closed_form(wg: &WeightedGraph) -> GraphStructure {
    let g = &wg.graph;
    let iso = g
        .labels()
        .iter()
        .filter(|l| g.open_neighborhood(g.vertex_index(l).unwrap()).is_empty())
        .count();
    let weights: Vec<Int> = wg.weights().iter().map(|&w| Int::from(w)).collect();
    let torsion: Vec<Int> = smith_normal_form(&IntMatrix::diagonal(&weights))
        .diagonal()
        .into_iter()
        .filter(|d| !d.is_zero() && !d.is_one())
        .collect();
    GraphStructure {
        center_rank: iso + g.edge_count(),
        abelianization_free_rank: g.vertex_count(),
        abelianization_torsion: torsion,
        hirsch: g.vertex_count() + g.edge_count(),
        index: wg.weight_product(),
    }
}
