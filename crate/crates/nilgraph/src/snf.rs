//! Smith normal form with unimodular transforms, determinant divisors,
//! Hermite normal form and saturation of integer row lattices.

use itertools::Itertools;
use num_integer::Integer as _;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::matrix::IntMatrix;
use crate::scalar::Int;

/// U * M * V = S with U, V unimodular and S diagonal, s_1 | s_2 | ... >= 0,
/// zeros trailing.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SnfResult {
    pub s: IntMatrix,
    pub u: IntMatrix,
    pub v: IntMatrix,
}

impl SnfResult {
    pub fn diagonal(&self) -> Vec<Int> {
        (0..self.s.rows().min(self.s.cols()))
            .map(|i| self.s.get(i, i).clone())
            .collect()
    }

    pub fn rank(&self) -> usize {
        self.diagonal().iter().filter(|d| !d.is_zero()).count()
    }

    /// Product of the first l diagonal entries (the l-th determinant divisor).
    pub fn determinant_divisor(&self, l: usize) -> Int {
        let mut p = Int::one();
        for d in self.diagonal().iter().take(l) {
            p *= d;
        }
        p
    }
}

pub fn smith_normal_form(m: &IntMatrix) -> SnfResult {
    let rows = m.rows();
    let cols = m.cols();
    let mut a = m.clone();
    let mut u = IntMatrix::identity(rows);
    let mut v = IntMatrix::identity(cols);

    // row op: r_i -= q * r_k, mirrored on u
    fn row_sub(a: &mut IntMatrix, u: &mut IntMatrix, i: usize, k: usize, q: &Int) {
        for j in 0..a.cols() {
            let val = a.get(i, j) - q * a.get(k, j);
            a.set(i, j, val);
        }
        for j in 0..u.cols() {
            let val = u.get(i, j) - q * u.get(k, j);
            u.set(i, j, val);
        }
    }
    fn col_sub(a: &mut IntMatrix, v: &mut IntMatrix, j: usize, k: usize, q: &Int) {
        for i in 0..a.rows() {
            let val = a.get(i, j) - q * a.get(i, k);
            a.set(i, j, val);
        }
        for i in 0..v.rows() {
            let val = v.get(i, j) - q * v.get(i, k);
            v.set(i, j, val);
        }
    }

    let mut t = 0;
    while t < rows.min(cols) {
        // smallest nonzero entry of the remaining block becomes the pivot
        let mut pivot: Option<(usize, usize)> = None;
        for i in t..rows {
            for j in t..cols {
                if a.get(i, j).is_zero() {
                    continue;
                }
                match pivot {
                    Some((pi, pj)) if a.get(pi, pj).abs() <= a.get(i, j).abs() => {}
                    _ => pivot = Some((i, j)),
                }
            }
        }
        let Some((pi, pj)) = pivot else { break };
        if pi != t {
            a.swap_rows(pi, t);
            u.swap_rows(pi, t);
        }
        if pj != t {
            a.swap_cols(pj, t);
            v.swap_cols(pj, t);
        }

        loop {
            let p = a.get(t, t).clone();
            let mut dirty = false;
            for i in t + 1..rows {
                if a.get(i, t).is_zero() {
                    continue;
                }
                let q = a.get(i, t).div_floor(&p);
                row_sub(&mut a, &mut u, i, t, &q);
                if !a.get(i, t).is_zero() {
                    // remainder smaller than |p| becomes the new pivot
                    a.swap_rows(i, t);
                    u.swap_rows(i, t);
                    dirty = true;
                    break;
                }
            }
            if dirty {
                continue;
            }
            for j in t + 1..cols {
                if a.get(t, j).is_zero() {
                    continue;
                }
                let q = a.get(t, j).div_floor(&p);
                col_sub(&mut a, &mut v, j, t, &q);
                if !a.get(t, j).is_zero() {
                    a.swap_cols(j, t);
                    v.swap_cols(j, t);
                    dirty = true;
                    break;
                }
            }
            if dirty {
                continue;
            }
            // pivot must divide every remaining entry for the chain property
            let mut offender = None;
            'outer: for i in t + 1..rows {
                for j in t + 1..cols {
                    if !a.get(i, j).mod_floor(&p).is_zero() {
                        offender = Some(i);
                        break 'outer;
                    }
                }
            }
            match offender {
                Some(i) => {
                    let minus_one = -Int::one();
                    row_sub(&mut a, &mut u, t, i, &minus_one); // r_t += r_i
                }
                None => break,
            }
        }
        t += 1;
    }

    // sign normalization: make the diagonal nonnegative
    for i in 0..rows.min(cols) {
        if a.get(i, i).is_negative() {
            for j in 0..cols {
                let val = -a.get(i, j).clone();
                a.set(i, j, val);
            }
            for j in 0..u.cols() {
                let val = -u.get(i, j).clone();
                u.set(i, j, val);
            }
        }
    }

    SnfResult { s: a, u, v }
}

/// l-th determinant divisor: gcd of all l x l minors (0 when all vanish).
///
/// Small matrices enumerate minors directly; larger ones go through the
/// Smith normal form. The minor path doubles as the test oracle.
pub fn determinant_divisors(m: &IntMatrix, l: usize) -> Result<Int> {
    if l == 0 || l > m.rows().min(m.cols()) {
        return Err(Error::IndexOutOfRange(format!(
            "determinant divisor index {l} for a {}x{} matrix",
            m.rows(),
            m.cols()
        )));
    }
    if m.rows().min(m.cols()) > 6 {
        return Ok(smith_normal_form(m).determinant_divisor(l));
    }
    determinant_divisors_by_minors(m, l)
}

/// Direct gcd over all l x l minors.
pub fn determinant_divisors_by_minors(m: &IntMatrix, l: usize) -> Result<Int> {
    if l == 0 || l > m.rows().min(m.cols()) {
        return Err(Error::IndexOutOfRange(format!(
            "determinant divisor index {l} for a {}x{} matrix",
            m.rows(),
            m.cols()
        )));
    }
    let mut g = Int::zero();
    for rows in (0..m.rows()).combinations(l) {
        for cols in (0..m.cols()).combinations(l) {
            let d = m.submatrix(&rows, &cols).det()?;
            g = g.gcd(&d);
            if g.is_one() {
                return Ok(g);
            }
        }
    }
    Ok(g)
}

/// Row-style Hermite normal form: canonical upper-echelon basis of the row
/// lattice, positive pivots, entries above each pivot reduced, zero rows
/// dropped.
pub fn hermite_normal_form(m: &IntMatrix) -> IntMatrix {
    let rows = m.rows();
    let cols = m.cols();
    let mut a = m.clone();

    fn negate_row(a: &mut IntMatrix, i: usize) {
        for j in 0..a.cols() {
            let val = -a.get(i, j).clone();
            a.set(i, j, val);
        }
    }
    fn row_sub(a: &mut IntMatrix, i: usize, k: usize, q: &Int) {
        for j in 0..a.cols() {
            let val = a.get(i, j) - q * a.get(k, j);
            a.set(i, j, val);
        }
    }

    let mut r = 0;
    for c in 0..cols {
        if r == rows {
            break;
        }
        // euclidean elimination in column c, rows r..
        loop {
            let k = (r..rows)
                .filter(|&i| !a.get(i, c).is_zero())
                .min_by_key(|&i| a.get(i, c).abs());
            let Some(k) = k else { break };
            a.swap_rows(r, k);
            let p = a.get(r, c).clone();
            let mut reduced = false;
            for i in r + 1..rows {
                if a.get(i, c).is_zero() {
                    continue;
                }
                let q = a.get(i, c).div_floor(&p);
                row_sub(&mut a, i, r, &q);
                reduced = true;
            }
            if !reduced {
                break;
            }
        }
        if a.get(r, c).is_zero() {
            continue;
        }
        if a.get(r, c).is_negative() {
            negate_row(&mut a, r);
        }
        let p = a.get(r, c).clone();
        for i in 0..r {
            let q = a.get(i, c).div_floor(&p);
            if !q.is_zero() {
                row_sub(&mut a, i, r, &q);
            }
        }
        r += 1;
    }
    let kept: Vec<Vec<Int>> = (0..r).map(|i| a.row(i)).collect();
    IntMatrix::from_rows(kept).expect("rectangular")
}

/// An integer lattice inside Z^ambient, held as a canonical (HNF) row basis.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Lattice {
    ambient: usize,
    basis: IntMatrix,
}

impl Lattice {
    /// Lattice spanned by the rows of `gens`.
    pub fn from_rows(gens: &IntMatrix) -> Self {
        Lattice {
            ambient: gens.cols(),
            basis: hermite_normal_form(gens),
        }
    }

    pub fn ambient(&self) -> usize {
        self.ambient
    }

    pub fn rank(&self) -> usize {
        self.basis.rows()
    }

    pub fn basis(&self) -> &IntMatrix {
        &self.basis
    }

    pub fn contains(&self, v: &[Int]) -> Result<bool> {
        if v.len() != self.ambient {
            return Err(Error::DimensionMismatch("lattice membership".into()));
        }
        Ok(self.coordinates(v)?.is_some())
    }

    /// Integer coordinates of v in the basis, when they exist.
    pub fn coordinates(&self, v: &[Int]) -> Result<Option<Vec<Int>>> {
        // solve x * basis = v over Q, then check integrality
        let bt = self.basis.to_rat().transpose();
        let rhs: Vec<_> = v.iter().map(|x| crate::scalar::Rat::from_integer(x.clone())).collect();
        let sol = bt.solve(&rhs)?;
        match sol {
            None => Ok(None),
            Some(x) => {
                if x.iter().all(|c| c.is_integer()) {
                    Ok(Some(x.into_iter().map(|c| c.to_integer()).collect()))
                } else {
                    Ok(None)
                }
            }
        }
    }

    pub fn is_sublattice_of(&self, other: &Lattice) -> Result<bool> {
        for i in 0..self.basis.rows() {
            if !other.contains(&self.basis.row(i))? {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// Saturation: all integer vectors lying in the rational span.
    pub fn saturation(&self) -> Lattice {
        let snf = smith_normal_form(&self.basis);
        let r = snf.rank();
        let v_inv = snf
            .v
            .inverse_unimodular()
            .expect("SNF transform is unimodular");
        let rows: Vec<Vec<Int>> = (0..r).map(|i| v_inv.row(i)).collect();
        let gens = IntMatrix::from_rows(rows).expect("rectangular");
        Lattice::from_rows(&gens)
    }

    /// Index of `self` in `other` for self a finite-index sublattice.
    pub fn index_in(&self, other: &Lattice) -> Result<Int> {
        if self.rank() != other.rank() {
            return Err(Error::DimensionMismatch(
                "index of a lattice of smaller rank is infinite".into(),
            ));
        }
        if !self.is_sublattice_of(other)? {
            return Err(Error::InvalidInput("not a sublattice".into()));
        }
        let mut coords = Vec::with_capacity(self.rank());
        for i in 0..self.basis.rows() {
            let c = other
                .coordinates(&self.basis.row(i))?
                .expect("sublattice rows have integer coordinates");
            coords.push(c);
        }
        let m = IntMatrix::from_rows(coords)?;
        Ok(m.det()?.abs())
    }
}
