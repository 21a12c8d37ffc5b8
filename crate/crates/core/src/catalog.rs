//! Dimension and incidence tables for the Freudenthal geometries, the magic
//! square and the orbit stratifications, with arithmetic cross-checks.
//!
//! Every dimension is a linear form `u·m + v` in `m = dim 𝔸`. Entries that
//! are recorded but not recomputed anywhere in this crate carry
//! `computed: false`.

use std::fmt;
use std::str::FromStr;

use rand::Rng;
use serde::Serialize;

use crate::algebra::AlgebraTag;
use crate::error::{Error, Result};
use crate::sample::random_jordan;
use crate::scalar::Scalar;
use crate::triple::{affine_tangent_space, dphi, grad_q, phi, quartic, vector_rank, CalibrationConstants};

/// The admissible values of `m`.
pub const M_VALUES: [i64; 4] = [1, 2, 4, 8];

/// `u·m + v`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct LinearForm {
    pub u: i64,
    pub v: i64,
}

impl LinearForm {
    pub const fn new(u: i64, v: i64) -> Self {
        LinearForm { u, v }
    }

    pub const fn eval(self, m: i64) -> i64 {
        self.u * m + self.v
    }

    /// The form with coefficients exchanged.
    pub const fn swapped(self) -> Self {
        LinearForm { u: self.v, v: self.u }
    }
}

impl fmt::Display for LinearForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match (self.u, self.v) {
            (0, v) => write!(f, "{v}"),
            (u, 0) => write!(f, "{u}m"),
            (1, v) if v > 0 => write!(f, "m+{v}"),
            (1, v) => write!(f, "m{v}"),
            (u, v) if v > 0 => write!(f, "{u}m+{v}"),
            (u, v) => write!(f, "{u}m{v}"),
        }
    }
}

const fn lf(u: i64, v: i64) -> LinearForm {
    LinearForm::new(u, v)
}

/// Element types of a Freudenthal geometry.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum ElementKind {
    Points,
    Lines,
    Planes,
    Symplecta,
}

impl ElementKind {
    pub const ALL: [ElementKind; 4] =
        [ElementKind::Points, ElementKind::Lines, ElementKind::Planes, ElementKind::Symplecta];

    pub fn name(self) -> &'static str {
        match self {
            ElementKind::Points => "F-points",
            ElementKind::Lines => "F-lines",
            ElementKind::Planes => "F-planes",
            ElementKind::Symplecta => "F-symplecta",
        }
    }

    fn index(self) -> usize {
        self as usize
    }
}

impl fmt::Display for ElementKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for ElementKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let key = s.trim().to_ascii_lowercase();
        let key = key.strip_prefix("f-").unwrap_or(&key);
        match key {
            "points" | "point" => Ok(ElementKind::Points),
            "lines" | "line" => Ok(ElementKind::Lines),
            "planes" | "plane" => Ok(ElementKind::Planes),
            "symplecta" | "symplecton" => Ok(ElementKind::Symplecta),
            _ => Err(Error::InvalidInput(format!("unknown element kind `{s}`"))),
        }
    }
}

/// One row of the Freudenthal chart: the dimension of each space of
/// elements, and the homogeneous variety realising it for `m = 1, 2, 4, 8`.
#[derive(Clone, Debug, Serialize)]
pub struct FGeometryRow {
    pub row: u8,
    pub entries: Vec<FGeometryEntry>,
}

#[derive(Clone, Debug, Serialize)]
pub struct FGeometryEntry {
    pub kind: ElementKind,
    pub dim: LinearForm,
    /// Varieties for `m = 1, 2, 4, 8`.
    pub varieties: [&'static str; 4],
}

impl FGeometryRow {
    pub fn entry(&self, kind: ElementKind) -> Option<&FGeometryEntry> {
        self.entries.iter().find(|e| e.kind == kind)
    }
}

fn entry(kind: ElementKind, dim: LinearForm, varieties: [&'static str; 4]) -> FGeometryEntry {
    FGeometryEntry { kind, dim, varieties }
}

/// The four rows of the chart.
pub fn f_geometry_rows() -> Vec<FGeometryRow> {
    use ElementKind::*;
    vec![
        FGeometryRow {
            row: 1,
            entries: vec![entry(Points, lf(2, -1), ["v4(P1)", "F(1,2;3)", "Gw(2,6)", "OP2_0"])],
        },
        FGeometryRow {
            row: 2,
            entries: vec![
                entry(Points, lf(2, 0), ["v2(P2)", "P2xP2", "G(2,6)", "OP2"]),
                entry(Lines, lf(2, 0), ["v2(P2)", "P2xP2", "G(2,6)", "OP2"]),
            ],
        },
        FGeometryRow {
            row: 3,
            entries: vec![
                entry(Points, lf(4, 1), ["v2(P5)", "F(1,5;6)", "Go(2,12)", "E7ad"]),
                entry(Lines, lf(5, 2), ["Gw(2,6)", "F(2,4;6)", "Go(4,12)", "E7/P6"]),
                entry(Planes, lf(3, 3), ["Gw(3,6)", "G(3,6)", "S12", "E7/P7"]),
            ],
        },
        FGeometryRow {
            row: 4,
            entries: vec![
                entry(Points, lf(9, 6), ["v2(OP2_0)", "E6/P1,6", "E7/P6", "E8/P1"]),
                entry(Lines, lf(11, 9), ["F4/P3", "E6/P3,5", "E7/P4", "E8/P6"]),
                entry(Planes, lf(9, 11), ["F4/P2", "E6/P4", "E7/P3", "E8/P7"]),
                entry(Symplecta, lf(6, 9), ["F4ad", "E6ad", "E7ad", "E8ad"]),
            ],
        },
    ]
}

fn check_m(m: i64) -> Result<()> {
    if M_VALUES.contains(&m) {
        Ok(())
    } else {
        Err(Error::InvalidInput(format!("m must be one of 1, 2, 4, 8 (got {m})")))
    }
}

fn row_form(row: u8, kind: ElementKind) -> Result<LinearForm> {
    let rows = f_geometry_rows();
    let r = rows
        .iter()
        .find(|r| r.row == row)
        .ok_or_else(|| Error::InvalidInput(format!("row must be 1..=4 (got {row})")))?;
    r.entry(kind)
        .map(|e| e.dim)
        .ok_or_else(|| Error::InvalidInput(format!("row {row} has no {kind}")))
}

/// Dimension of the space of elements of the given kind in the given row.
pub fn lookup(row: u8, kind: ElementKind, m: i64) -> Result<i64> {
    check_m(m)?;
    Ok(row_form(row, kind)?.eval(m))
}

/// In the fourth row, the spaces of elements of complementary type have
/// dimensions `um+v` and `vm+u`.
pub fn check_duality(m: i64) -> bool {
    let rows = f_geometry_rows();
    let Some(row4) = rows.iter().find(|r| r.row == 4) else {
        return false;
    };
    let form = |k: ElementKind| row4.entry(k).map(|e| e.dim);
    let pairs = [
        (ElementKind::Points, ElementKind::Symplecta),
        (ElementKind::Lines, ElementKind::Planes),
    ];
    pairs.iter().all(|&(a, b)| match (form(a), form(b)) {
        (Some(fa), Some(fb)) => fa.swapped() == fb && fa.swapped().eval(m) == fb.eval(m),
        _ => false,
    })
}

/// A chain of orbit closures with their (projective) dimensions.
#[derive(Clone, Debug, Serialize)]
pub struct OrbitTable {
    pub family: &'static str,
    pub orbits: Vec<OrbitEntry>,
    /// Dimension of the ambient projective space, when it is a linear form.
    pub ambient: Option<LinearForm>,
    /// Whether this crate recomputes at least one entry independently.
    pub computed: bool,
}

#[derive(Clone, Debug, Serialize)]
pub struct OrbitEntry {
    pub name: &'static str,
    pub dim: LinearForm,
    /// Nilpotent-orbit label where one is tabulated.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub label: Option<&'static str>,
}

fn orbit(name: &'static str, dim: LinearForm, label: Option<&'static str>) -> OrbitEntry {
    OrbitEntry { name, dim, label }
}

/// The four-orbit stratification of `P(V)` for `V = Z2(𝔸)`.
pub fn third_row_orbits() -> OrbitTable {
    OrbitTable {
        family: "P(Z2(A)) under Sp6(A)",
        orbits: vec![
            orbit("closed orbit Gw(A3,A6)", lf(3, 3), None),
            orbit("sigma_+", lf(5, 3), None),
            orbit("tangential variety Q = 0", lf(6, 6), None),
        ],
        ambient: Some(lf(6, 7)),
        computed: true,
    }
}

/// Orbit closures inside the secant variety of the exceptional adjoint
/// varieties. Table data only.
pub fn adjoint_secant_orbits() -> OrbitTable {
    OrbitTable {
        family: "sigma(E(A)ad) under E(A)",
        orbits: vec![
            orbit("E(A)ad", lf(6, 9), Some("A1")),
            orbit("sigma_(2m+7)", lf(10, 11), Some("2A1")),
            orbit("sigma_(3)", lf(12, 15), Some("3A1")),
            orbit("sigma_(1)", lf(12, 17), Some("A2")),
            orbit("sigma", lf(12, 18), None),
        ],
        ambient: None,
        computed: false,
    }
}

/// Orbit closures in the secant varieties of classical and `G2` adjoint
/// varieties, recorded by name only.
#[derive(Clone, Debug, Serialize)]
pub struct ClassicalOrbitList {
    pub group: &'static str,
    pub adjoint_variety: &'static str,
    pub closures: Vec<&'static str>,
    pub totally_ordered: bool,
    pub note: &'static str,
}

pub fn classical_orbit_lists() -> Vec<ClassicalOrbitList> {
    vec![
        ClassicalOrbitList {
            group: "G2",
            adjoint_variety: "G2ad (dimension 5)",
            closures: vec!["G2ad", "sigma_(3)", "sigma_(1)", "sigma = tau"],
            totally_ordered: true,
            note: "sigma_(1) is the closure of the projectivized subregular nilpotent orbit",
        },
        ClassicalOrbitList {
            group: "SLn",
            adjoint_variety: "F(1,n-1;n) (dimension 2n-3)",
            closures: vec!["F(1,n-1;n)", "sigma_(3)", "sigma_(1)", "sigma = tau"],
            totally_ordered: true,
            note: "intermediate orbits: one 3x3 nilpotent Jordan block, two 2x2 nilpotent blocks",
        },
        ClassicalOrbitList {
            group: "SOn",
            adjoint_variety: "Go(2,n)",
            closures: vec!["Go(2,n)", "sigma_(2n-9)", "sigma_(7)", "sigma_(1)", "sigma"],
            totally_ordered: false,
            note: "sigma_(2n-9) and sigma_(7) are incomparable",
        },
        ClassicalOrbitList {
            group: "Sp2n",
            adjoint_variety: "v2(P(2n-1))",
            closures: vec!["v2(P(2n-1))", "sigma_(1)", "sigma"],
            totally_ordered: true,
            note: "sigma_(1) comes from isotropic planes",
        },
    ]
}

/// Result of [`check_orbit_dims`].
#[derive(Clone, Debug, Serialize)]
pub struct OrbitDimReport {
    pub tag: AlgebraTag,
    pub m: i64,
    pub expected_closed_orbit_dim: i64,
    /// `rank dφ` at each sample, i.e. the projective dimension of the image.
    pub closed_orbit_ranks: Vec<usize>,
    pub tangential_samples: usize,
    /// Samples `φ + dφ(T)` where `Q = 0` and `gradQ ≠ 0` exactly when `det T ≠ 0`.
    pub tangential_consistent: usize,
    pub adjoint_dims: Vec<i64>,
    pub adjoint_note: &'static str,
    pub passed: bool,
}

/// Cross-checks the closed-orbit dimension against the rank of `dφ` at
/// random points, and the hypersurface claim for the tangential variety
/// against `gradQ` on random tangent points.
pub fn check_orbit_dims<R: Rng + ?Sized>(
    cal: &CalibrationConstants,
    tag: AlgebraTag,
    samples: usize,
    bound: i64,
    rng: &mut R,
) -> Result<OrbitDimReport> {
    if cal.tag != tag {
        return Err(Error::TagMismatch { left: cal.tag, right: tag });
    }
    let m = tag.dim() as i64;
    let table = third_row_orbits();
    let expected = table.orbits[0].dim.eval(m);
    let mut ranks = Vec::with_capacity(samples);
    let mut consistent = 0;
    for _ in 0..samples {
        let p = random_jordan(rng, tag, bound);
        // The affine cone adds one dimension.
        ranks.push(vector_rank(&affine_tangent_space(&p)).saturating_sub(1));
        let t = random_jordan(rng, tag, bound);
        let w = &phi(&Scalar::ONE, &p) + &dphi(&p, &t);
        let on_tau = quartic(cal, &w).is_zero();
        let grad_nonzero = grad_q(cal, &w).iter().any(|c| !c.is_zero());
        if on_tau && grad_nonzero == !t.det().is_zero() {
            consistent += 1;
        }
    }
    let adjoint_dims = adjoint_secant_orbits().orbits.iter().map(|o| o.dim.eval(m)).collect();
    let passed = ranks.iter().all(|&r| r as i64 == expected) && consistent == samples;
    Ok(OrbitDimReport {
        tag,
        m,
        expected_closed_orbit_dim: expected,
        closed_orbit_ranks: ranks,
        tangential_samples: samples,
        tangential_consistent: consistent,
        adjoint_dims,
        adjoint_note: "not independently computed",
        passed,
    })
}

/// A tangent-space decomposition `T = T1 ⊕ T2 ⊕ ...` with its dimensions.
#[derive(Clone, Debug, Serialize)]
pub struct TangentSplit {
    pub space: String,
    pub components: Vec<(&'static str, i64)>,
    pub total: i64,
    /// Dimension of the variety from the chart, when tabulated.
    pub expected: Option<i64>,
}

impl TangentSplit {
    pub fn consistent(&self) -> bool {
        let sum: i64 = self.components.iter().map(|c| c.1).sum();
        sum == self.total && self.expected.is_none_or(|e| e == self.total)
    }
}

/// One line of the folding chart: `W` and `V = C ⊕ W`.
#[derive(Clone, Debug, Serialize)]
pub struct FoldingEntry {
    pub folded: String,
    pub unfolded: String,
    pub w: &'static str,
    pub v: &'static str,
    pub dim_w: i64,
    pub dim_v: i64,
}

#[derive(Clone, Debug, Serialize)]
pub struct TangentTables {
    pub splits: Vec<TangentSplit>,
    pub folding: Vec<FoldingEntry>,
}

impl TangentTables {
    pub fn consistent(&self) -> bool {
        self.splits.iter().all(TangentSplit::consistent)
            && self.folding.iter().all(|f| f.dim_v == f.dim_w + 1)
    }
}

fn split(space: String, components: Vec<(&'static str, i64)>, expected: Option<i64>) -> TangentSplit {
    let total = components.iter().map(|c| c.1).sum();
    TangentSplit { space, components, total, expected }
}

fn binom2(n: i64) -> i64 {
    n * (n - 1) / 2
}

/// Tangent-space decompositions of the F-varieties and the folding chart.
/// The folding entries are evaluated at `n` for the classical families.
pub fn tangent_tables(n: i64) -> TangentTables {
    let mut splits = Vec::new();
    let form = |row, kind| row_form(row, kind).ok();
    for ma in M_VALUES {
        for mb in M_VALUES {
            // g/p = A⊗B ⊕ A0 ⊕ B0; rows B = R and B = O are the F-points,
            // B = H the F-lines, B = C the point-line incidences.
            let expected = match mb {
                1 => form(1, ElementKind::Points).map(|f| f.eval(ma)),
                2 => form(2, ElementKind::Points).map(|f| f.eval(ma) + ma),
                4 => form(3, ElementKind::Lines).map(|f| f.eval(ma)),
                8 => form(4, ElementKind::Points).map(|f| f.eval(ma)),
                _ => None,
            };
            splits.push(split(
                format!("g/p for (m_A, m_B) = ({ma}, {mb})"),
                vec![("A⊗B", ma * mb), ("A0⊕B0", (ma - 1) + (mb - 1))],
                expected,
            ));
        }
    }
    for m in M_VALUES {
        let y_quadrics = m + 2;
        splits.push(split(format!("row 2 F-points, m = {m}"), vec![("T1 = A2", 2 * m)], form(2, ElementKind::Points).map(|f| f.eval(m))));
        splits.push(split(
            format!("row 3 F-points, m = {m}"),
            vec![("T1 = H⊗A", 4 * m), ("T2 = C", 1)],
            form(3, ElementKind::Points).map(|f| f.eval(m)),
        ));
        for p in 2..=4i64 {
            let mut comps = vec![("T1 = C^(p-1)⊗A^2", (p - 1) * 2 * m)];
            if p >= 3 {
                comps.push(("T2 = Λ2C^(p-1)⊗I2(Y)", binom2(p - 1) * y_quadrics));
            }
            if p == 4 {
                comps.push(("T3", 2 * m));
                comps.push(("T4", 3));
            }
            splits.push(split(
                format!("row {p} F-lines, m = {m}"),
                comps,
                form(p as u8, ElementKind::Lines).map(|f| f.eval(m)),
            ));
        }
        let j3 = 3 * m + 3;
        splits.push(split(format!("row 3 F-planes, m = {m}"), vec![("T1 = J3(A)", j3)], form(3, ElementKind::Planes).map(|f| f.eval(m))));
        splits.push(split(
            format!("row 4 F-planes, m = {m}"),
            vec![("T1 = C2⊗J3(A)", 2 * j3), ("T2 = J3(A)*", j3), ("T3 = C2", 2)],
            form(4, ElementKind::Planes).map(|f| f.eval(m)),
        ));
        splits.push(split(
            format!("row 4 F-symplecta, m = {m}"),
            vec![("T1 = Z2(A)", 6 * m + 8), ("T2 = C", 1)],
            form(4, ElementKind::Symplecta).map(|f| f.eval(m)),
        ));
    }
    let mut folding = vec![FoldingEntry {
        folded: format!("B{n}"),
        unfolded: format!("D{}", n + 1),
        w: "C^(2n+1)",
        v: "C^(2n+2)",
        dim_w: 2 * n + 1,
        dim_v: 2 * n + 2,
    }];
    for m in M_VALUES {
        folding.push(FoldingEntry {
            folded: format!("F(m={m})"),
            unfolded: format!("E(m={m})"),
            w: "J3(A)0",
            v: "J3(A)",
            dim_w: 3 * m + 2,
            dim_v: 3 * m + 3,
        });
    }
    folding.push(FoldingEntry {
        folded: format!("C{n}"),
        unfolded: format!("A{}", 2 * n - 1),
        w: "Jn(H)0",
        v: "Jn(H)",
        dim_w: n * (2 * n - 1) - 1,
        dim_v: n * (2 * n - 1),
    });
    folding.push(FoldingEntry {
        folded: format!("A{n}"),
        unfolded: format!("A{n}xA{n}"),
        w: "sl_n",
        v: "M_n",
        dim_w: n * n - 1,
        dim_v: n * n,
    });
    TangentTables { splits, folding }
}

/// One cell of a magic square.
#[derive(Clone, Debug, Serialize)]
pub struct MagicCell {
    pub name: &'static str,
    pub dim: i64,
}

fn der_dim(m: i64) -> i64 {
    match m {
        4 => 3,
        8 => 14,
        _ => 0,
    }
}

fn der_j3_dim(m: i64) -> i64 {
    match m {
        1 => 3,
        2 => 8,
        4 => 21,
        8 => 52,
        _ => 0,
    }
}

/// `dim Der A + dim(A0 ⊗ J3(B)0) + dim Der J3(B)`.
pub fn tits_dimension(ma: i64, mb: i64) -> i64 {
    der_dim(ma) + (ma - 1) * (3 * mb + 2) + der_j3_dim(mb)
}

/// The 4×4 magic square, rows and columns indexed by `m = 1, 2, 4, 8`.
pub fn magic_square() -> [[MagicCell; 4]; 4] {
    let names = [
        ["so3", "sl3", "sp6", "f4"],
        ["sl3", "sl3xsl3", "sl6", "e6"],
        ["sp6", "sl6", "so12", "e7"],
        ["f4", "e6", "e7", "e8"],
    ];
    let dims = [[3, 8, 21, 52], [8, 16, 35, 78], [21, 35, 66, 133], [52, 78, 133, 248]];
    std::array::from_fn(|i| std::array::from_fn(|j| MagicCell { name: names[i][j], dim: dims[i][j] }))
}

/// The fifth column attached to `𝔸 = 0`.
pub fn magic_square_zero_column() -> [MagicCell; 4] {
    [
        MagicCell { name: "0", dim: 0 },
        MagicCell { name: "0", dim: 0 },
        MagicCell { name: "so3", dim: 3 },
        MagicCell { name: "g2", dim: 14 },
    ]
}

/// The classical 3×3 square for `J_n`, with dimensions as functions of `n`.
pub fn magic_square_n(n: i64) -> [[MagicCell; 3]; 3] {
    let names = [
        ["so_n", "sl_n", "sp_2n"],
        ["sl_n", "sl_n x sl_n", "sl_2n"],
        ["sp_2n", "sl_2n", "spin_4n"],
    ];
    let so = n * (n - 1) / 2;
    let sl = n * n - 1;
    let sp = n * (2 * n + 1);
    let sl2 = 4 * n * n - 1;
    let spin = 2 * n * (4 * n - 1);
    let dims = [[so, sl, sp], [sl, 2 * sl, sl2], [sp, sl2, spin]];
    std::array::from_fn(|i| std::array::from_fn(|j| MagicCell { name: names[i][j], dim: dims[i][j] }))
}

/// F-points, F-hyperplanes of the square for `J_n`, columns `m = 1, 2, 4`.
pub fn magic_square_n_varieties() -> [[&'static str; 3]; 4] {
    [
        ["v2(Q^(n-2))", "F(1,n-1;n)", "Gw(2,2n)"],
        ["v2(P^(n-1))", "Seg(P^(n-1)xP^(n-1))", "G(2,2n)"],
        ["v2(P^(2n-1))", "F(1,2n-1;2n)", "Go(2,4n)"],
        ["Gw(n,2n)", "G(n,2n)", "S_2n"],
    ]
}

/// An F-Schubert incidence table: for an element of the row type, the
/// variety of incident elements of the column type.
#[derive(Clone, Debug, Serialize)]
pub struct IncidenceTable {
    pub row: u8,
    pub from: Vec<ElementKind>,
    pub to: Vec<ElementKind>,
    /// `cells[i][j]`: elements of type `to[j]` incident to an element of type `from[i]`.
    pub cells: Vec<Vec<&'static str>>,
}

pub fn incidence_tables() -> Vec<IncidenceTable> {
    use ElementKind::*;
    vec![
        IncidenceTable {
            row: 3,
            from: vec![Points, Lines, Planes],
            to: vec![Points, Lines, Planes],
            cells: vec![
                vec!["-", "AP1", "AP2"],
                vec!["Go(2,m+4)", "-", "AP2"],
                vec!["Go(1,m+4)", "P1", "-"],
            ],
        },
        IncidenceTable {
            row: 4,
            from: vec![Points, Lines, Planes, Symplecta],
            to: vec![Points, Lines, Planes, Symplecta],
            cells: vec![
                vec!["-", "AP1", "AP2", "Gw(A1,A6)"],
                vec!["Go(3,m+6)", "-", "AP2", "Gw(A2,A6)"],
                vec!["Go(2,m+6)", "P2", "-", "Gw(A3,A6)"],
                vec!["Go(1,m+6)", "P2", "P1", "-"],
            ],
        },
    ]
}

/// One named arithmetic check.
#[derive(Clone, Debug, Serialize)]
pub struct CatalogCheck {
    pub name: String,
    pub passed: bool,
}

/// All table-internal consistency checks.
pub fn catalog_checks() -> Vec<CatalogCheck> {
    let mut out = Vec::new();
    let mut push = |name: String, passed: bool| out.push(CatalogCheck { name, passed });

    let rows = f_geometry_rows();
    push(
        "chart rows carry 1, 2, 3, 4 element types".into(),
        rows.iter().enumerate().all(|(i, r)| r.entries.len() == i + 1 && r.row as usize == i + 1),
    );
    for m in M_VALUES {
        push(format!("duality swap at m = {m}"), check_duality(m));
    }
    // Row 2 is self-dual: points and lines are both Severi varieties.
    push(
        "row 2 points and lines agree".into(),
        row_form(2, ElementKind::Points).ok() == row_form(2, ElementKind::Lines).ok(),
    );
    // Closed orbits of the third row: F-planes in the chart.
    let third = third_row_orbits();
    push(
        "closed orbit equals row 3 F-planes".into(),
        row_form(3, ElementKind::Planes).ok() == Some(third.orbits[0].dim),
    );
    push(
        "tangential variety is a hypersurface".into(),
        third.ambient.map(|a| a.v - third.orbits[2].dim.v == 1 && a.u == third.orbits[2].dim.u) == Some(true),
    );
    // Adjoint varieties of the exceptional groups are the row 4 F-symplecta.
    let adj = adjoint_secant_orbits();
    push(
        "adjoint variety equals row 4 F-symplecta".into(),
        row_form(4, ElementKind::Symplecta).ok() == Some(adj.orbits[0].dim),
    );
    let top = adj.orbits[4].dim;
    let codims: Vec<LinearForm> = adj.orbits[1..4].iter().map(|o| lf(top.u - o.dim.u, top.v - o.dim.v)).collect();
    push(
        "secant orbit codimensions 2m+7, 3, 1".into(),
        codims == [lf(2, 7), lf(0, 3), lf(0, 1)],
    );
    push(
        "secant variety is one less than expected".into(),
        top == lf(2 * adj.orbits[0].dim.u, 2 * adj.orbits[0].dim.v),
    );
    let e8: Vec<i64> = adj.orbits.iter().map(|o| o.dim.eval(8)).collect();
    push("secant orbit dimensions at m = 8".into(), e8 == [57, 91, 111, 113, 114]);
    // Sp6(A)ad is the row 3 F-points variety; its quadrics have rank m+4.
    push(
        "Sp6(A)ad equals row 3 F-points".into(),
        row_form(3, ElementKind::Points).ok() == Some(lf(4, 1)),
    );

    let tables = tangent_tables(3);
    for s in &tables.splits {
        push(format!("tangent split: {}", s.space), s.consistent());
    }
    for f in &tables.folding {
        push(format!("folding {} -> {}", f.unfolded, f.folded), f.dim_v == f.dim_w + 1);
    }
    push(
        "folding E6 -> F4 gives (26, 27)".into(),
        tables.folding.iter().any(|f| f.folded == "F(m=8)" && (f.dim_w, f.dim_v) == (26, 27)),
    );

    let square = magic_square();
    let ms = M_VALUES;
    let mut tits_ok = true;
    let mut symmetric = true;
    for i in 0..4 {
        for j in 0..4 {
            tits_ok &= square[i][j].dim == tits_dimension(ms[j], ms[i]);
            symmetric &= square[i][j].dim == square[j][i].dim && square[i][j].name == square[j][i].name;
        }
    }
    push("magic square matches Der A + A0⊗J3(B)0 + Der J3(B)".into(), tits_ok);
    push("magic square is symmetric".into(), symmetric);
    let sq3 = magic_square_n(3);
    let block = (0..3).all(|i| (0..3).all(|j| sq3[i][j].dim == square[i][j].dim));
    push("square for n = 3 is the upper 3x3 block".into(), block);
    for n in 3..=8 {
        let sq = magic_square_n(n);
        let sym = (0..3).all(|i| (0..3).all(|j| sq[i][j].dim == sq[j][i].dim));
        push(format!("square for n = {n} is symmetric"), sym);
    }
    let inc = incidence_tables();
    push(
        "incidence tables are square with empty diagonal".into(),
        inc.iter().all(|t| {
            t.cells.len() == t.from.len()
                && t.cells.iter().enumerate().all(|(i, r)| r.len() == t.to.len() && r[i] == "-")
        }),
    );
    out
}

/// Everything the `tables` command prints.
#[derive(Clone, Debug, Serialize)]
pub struct CatalogDump {
    pub rows: Vec<EvaluatedRow>,
    pub third_row_orbits: OrbitTable,
    pub adjoint_secant_orbits: OrbitTable,
    pub classical_orbits: Vec<ClassicalOrbitList>,
    pub tangent: TangentTables,
    pub magic_square: [[MagicCell; 4]; 4],
    pub magic_square_zero_column: [MagicCell; 4],
    pub incidence: Vec<IncidenceTable>,
    pub checks: Vec<CatalogCheck>,
}

#[derive(Clone, Debug, Serialize)]
pub struct EvaluatedRow {
    pub row: u8,
    pub kind: ElementKind,
    pub form: String,
    /// `(m, dimension, variety)` for each selected `m`.
    pub values: Vec<(i64, i64, &'static str)>,
}

/// Evaluated chart restricted to an optional row and `m`.
pub fn evaluated_rows(row: Option<u8>, m: Option<i64>) -> Result<Vec<EvaluatedRow>> {
    if let Some(m) = m {
        check_m(m)?;
    }
    if let Some(r) = row {
        if !(1..=4).contains(&r) {
            return Err(Error::InvalidInput(format!("row must be 1..=4 (got {r})")));
        }
    }
    let mut out = Vec::new();
    for r in f_geometry_rows() {
        if row.is_some_and(|x| x != r.row) {
            continue;
        }
        for e in &r.entries {
            let values = M_VALUES
                .iter()
                .enumerate()
                .filter(|(_, &mm)| m.is_none_or(|x| x == mm))
                .map(|(i, &mm)| (mm, e.dim.eval(mm), e.varieties[i]))
                .collect();
            out.push(EvaluatedRow { row: r.row, kind: e.kind, form: e.dim.to_string(), values });
        }
    }
    out.sort_by_key(|e| (e.row, e.kind.index()));
    Ok(out)
}

pub fn dump(row: Option<u8>, m: Option<i64>) -> Result<CatalogDump> {
    Ok(CatalogDump {
        rows: evaluated_rows(row, m)?,
        third_row_orbits: third_row_orbits(),
        adjoint_secant_orbits: adjoint_secant_orbits(),
        classical_orbits: classical_orbit_lists(),
        tangent: tangent_tables(3),
        magic_square: magic_square(),
        magic_square_zero_column: magic_square_zero_column(),
        incidence: incidence_tables(),
        checks: catalog_checks(),
    })
}

/// Closed-orbit dimension of `P(Z2(A))` for the given tag.
pub fn closed_orbit_dim(tag: AlgebraTag) -> i64 {
    third_row_orbits().orbits[0].dim.eval(tag.dim() as i64)
}

/// Rank of `adW(E11)`-type quadrics on `Z2(A)`.
pub fn quadric_rank_expected(tag: AlgebraTag) -> i64 {
    tag.dim() as i64 + 4
}
