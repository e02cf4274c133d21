//! Concrete unitary matrix models of finite groups.

use num_complex::{Complex, Complex64};

use crate::dual::{CharacterTable, DualTable, IrrepLabel, ORTHOGONALITY_TOL};
use crate::error::{Error, Result};
use crate::linalg::CMatrix;
use crate::scalar::Real;

/// Elements, multiplication table and one unitary matrix per (irrep, element).
#[derive(Debug, Clone)]
pub struct MatrixModel<T> {
    name: String,
    dual: DualTable,
    labels: Vec<IrrepLabel>,
    mult: Vec<Vec<usize>>,
    identity: usize,
    inverse: Vec<usize>,
    /// `irreps[k][g]` = π_k(g)
    irreps: Vec<Vec<CMatrix<T>>>,
}

impl<T: Real> MatrixModel<T> {
    /// Validates the group axioms, the homomorphism and unitarity of every
    /// irrep, and that traces match `characters[k][g]` (all within 1e-9).
    pub fn new(
        name: impl Into<String>,
        dual: DualTable,
        labels: Vec<IrrepLabel>,
        mult: Vec<Vec<usize>>,
        irreps: Vec<Vec<CMatrix<T>>>,
        characters: &[Vec<Complex64>],
    ) -> Result<Self> {
        let bad = |msg: String| Err(Error::InvalidTable(msg));
        let n = mult.len();
        if n == 0 || mult.iter().any(|row| row.len() != n || row.iter().any(|&x| x >= n)) {
            return bad("multiplication table must be square with entries in range".into());
        }
        let identity = (0..n)
            .find(|&e| (0..n).all(|g| mult[e][g] == g && mult[g][e] == g))
            .ok_or_else(|| Error::InvalidTable("no identity element".into()))?;
        let mut inverse = Vec::with_capacity(n);
        for g in 0..n {
            match (0..n).find(|&h| mult[g][h] == identity && mult[h][g] == identity) {
                Some(h) => inverse.push(h),
                None => return bad(format!("element {g} has no inverse")),
            }
        }
        for a in 0..n {
            for b in 0..n {
                for c in 0..n {
                    if mult[mult[a][b]][c] != mult[a][mult[b][c]] {
                        return bad(format!("multiplication is not associative at ({a},{b},{c})"));
                    }
                }
            }
        }

        let expected = dual.all_labels()?;
        let mut sorted = labels.clone();
        sorted.sort();
        let mut want = expected.clone();
        want.sort();
        if sorted != want {
            return bad("model irreps must be exactly the irreps of the dual".into());
        }
        if irreps.len() != labels.len() || characters.len() != labels.len() {
            return bad("one matrix family and one character row per irrep".into());
        }
        let order: u64 = labels.iter().map(|l| dual.dim(l).map(|d| d * d)).sum::<Result<u64>>()?;
        if order != n as u64 {
            return bad(format!("sum of squared dimensions {order} differs from group order {n}"));
        }

        let tol = T::lit(ORTHOGONALITY_TOL).max(T::lit(64.0) * T::epsilon());
        for (k, (label, mats)) in labels.iter().zip(&irreps).enumerate() {
            let d = dual.dim(label)? as usize;
            if mats.len() != n || mats.iter().any(|m| m.rows() != d || m.cols() != d) {
                return bad(format!("irrep {k} needs {n} matrices of size {d}"));
            }
            let id = CMatrix::identity(d);
            for g in 0..n {
                if (&mats[g] * &mats[g].adjoint()).max_abs_diff(&id) > tol {
                    return bad(format!("irrep {k} is not unitary at element {g}"));
                }
                let tr = mats[g].trace();
                let chi = characters[k][g];
                if T::lit((tr.re.to_f64_lossy() - chi.re).hypot(tr.im.to_f64_lossy() - chi.im)) > tol {
                    return bad(format!("trace of irrep {k} at element {g} disagrees with its character"));
                }
                for h in 0..n {
                    if (&mats[g] * &mats[h]).max_abs_diff(&mats[mult[g][h]]) > tol {
                        return bad(format!("irrep {k} is not a homomorphism at ({g},{h})"));
                    }
                }
            }
        }

        Ok(Self { name: name.into(), dual, labels, mult, identity, inverse, irreps })
    }

    /// ℤ_n with π_j(k) = e^{2πijk/n}.
    pub fn cyclic(n: u64) -> Result<Self> {
        let table = CharacterTable::cyclic(n)?;
        let n = n as usize;
        let mult = (0..n).map(|a| (0..n).map(|b| (a + b) % n).collect()).collect();
        let irreps = (0..n)
            .map(|j| {
                (0..n)
                    .map(|k| {
                        let angle = T::lit(2.0) * T::PI() * T::count(((j * k) % n) as u64) / T::count(n as u64);
                        CMatrix::from_fn(1, 1, |_, _| Complex::new(angle.cos(), angle.sin()))
                    })
                    .collect()
            })
            .collect();
        let characters: Vec<Vec<Complex64>> =
            (0..n).map(|j| (0..n).map(|k| table.character(j, k)).collect()).collect();
        Self::new(format!("Z{n}"), table.into(), (0..n).map(IrrepLabel::Finite).collect(), mult, irreps, &characters)
    }

    /// S₃ acting on {0,1,2}. Element order: e, (01), (02), (12), (012), (021).
    /// The standard irrep is the permutation action restricted to the plane
    /// orthogonal to (1,1,1), in an orthonormal basis, so its matrices are
    /// real rotations and reflections.
    pub fn s3() -> Self {
        let perms: [[usize; 3]; 6] = [[0, 1, 2], [1, 0, 2], [2, 1, 0], [0, 2, 1], [1, 2, 0], [2, 0, 1]];
        let classes = [0, 1, 1, 1, 2, 2];
        let index = |p: [usize; 3]| perms.iter().position(|q| *q == p).expect("closed under composition");
        let mult = (0..6)
            .map(|a| (0..6).map(|b| index([0, 1, 2].map(|x| perms[a][perms[b][x]]))).collect())
            .collect();

        let r2 = 2f64.sqrt();
        let r6 = 6f64.sqrt();
        // columns: (1,-1,0)/√2 and (1,1,-2)/√6
        let basis = [[1.0 / r2, 1.0 / r6], [-1.0 / r2, 1.0 / r6], [0.0, -2.0 / r6]];
        let standard = |p: &[usize; 3]| {
            // P e_x = e_{p(x)}, so (BᵀPB)_{ij} = Σ_x B_{p(x),i} B_{x,j}
            let mut m = [0.0; 4];
            for i in 0..2 {
                for j in 0..2 {
                    m[i * 2 + j] = (0..3).map(|x| basis[p[x]][i] * basis[x][j]).sum();
                }
            }
            CMatrix::from_real(2, 2, &m)
        };
        let sign = [1.0, -1.0, -1.0, -1.0, 1.0, 1.0];
        let irreps = vec![
            (0..6).map(|_| CMatrix::identity(1)).collect(),
            sign.iter().map(|&s| CMatrix::from_real(1, 1, &[s])).collect(),
            perms.iter().map(standard).collect(),
        ];
        let table = CharacterTable::s3();
        let characters: Vec<Vec<Complex64>> =
            (0..3).map(|k| classes.iter().map(|&c| table.character(k, c)).collect()).collect();
        Self::new("S3", table.into(), (0..3).map(IrrepLabel::Finite).collect(), mult, irreps, &characters)
            .expect("S3 model is valid")
    }

    /// G × H with irreps π ⊗ ρ realised as Kronecker products. Elements and
    /// irreps are indexed row-major: (g, h) ↦ g·|H| + h.
    pub fn direct_product(a: &Self, b: &Self) -> Result<Self> {
        let (na, nb) = (a.order(), b.order());
        let mult = (0..na * nb)
            .map(|x| (0..na * nb).map(|y| a.mult[x / nb][y / nb] * nb + b.mult[x % nb][y % nb]).collect())
            .collect();
        let mut labels = Vec::new();
        let mut irreps = Vec::new();
        let mut characters = Vec::new();
        for (ka, (la, ma)) in a.labels.iter().zip(&a.irreps).enumerate() {
            for (kb, (lb, mb)) in b.labels.iter().zip(&b.irreps).enumerate() {
                labels.push(IrrepLabel::product([la.clone(), lb.clone()]));
                irreps.push((0..na * nb).map(|x| ma[x / nb].kron(&mb[x % nb])).collect());
                // χ_{π⊗ρ}(g,h) = χ_π(g)χ_ρ(h), taken from the factors
                characters.push(
                    (0..na * nb).map(|x| a.character(ka, x / nb) * b.character(kb, x % nb)).collect::<Vec<_>>(),
                );
            }
        }
        let dual = DualTable::product(vec![a.dual.clone(), b.dual.clone()])?;
        Self::new(format!("{}x{}", a.name, b.name), dual, labels, mult, irreps, &characters)
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn dual(&self) -> &DualTable {
        &self.dual
    }

    pub fn order(&self) -> usize {
        self.mult.len()
    }

    pub fn identity(&self) -> usize {
        self.identity
    }

    pub fn inverse(&self, g: usize) -> usize {
        self.inverse[g]
    }

    pub fn multiply(&self, g: usize, h: usize) -> usize {
        self.mult[g][h]
    }

    pub fn multiplication_table(&self) -> &[Vec<usize>] {
        &self.mult
    }

    pub fn labels(&self) -> &[IrrepLabel] {
        &self.labels
    }

    pub fn irrep_count(&self) -> usize {
        self.labels.len()
    }

    /// π_k(g)
    pub fn matrix(&self, irrep: usize, g: usize) -> &CMatrix<T> {
        &self.irreps[irrep][g]
    }

    pub fn dim(&self, irrep: usize) -> usize {
        self.irreps[irrep][0].rows()
    }

    /// tr π_k(g) as an `f64` complex number.
    pub fn character(&self, irrep: usize, g: usize) -> Complex64 {
        let t = self.irreps[irrep][g].trace();
        Complex64::new(t.re.to_f64_lossy(), t.im.to_f64_lossy())
    }
}

/// The built-in finite models: ℤ₄, ℤ₆, S₃, S₃×ℤ₂, S₃×S₃.
pub fn builtin_models<T: Real>() -> Vec<MatrixModel<T>> {
    let s3 = MatrixModel::s3();
    let z2 = MatrixModel::cyclic(2).expect("Z2");
    vec![
        MatrixModel::cyclic(4).expect("Z4"),
        MatrixModel::cyclic(6).expect("Z6"),
        MatrixModel::direct_product(&s3, &z2).expect("S3xZ2"),
        MatrixModel::direct_product(&s3, &s3).expect("S3xS3"),
        s3,
    ]
}
