//! The `verify-paper` battery: one row per case, rows run in parallel and
//! reported in a fixed order.

use std::fmt::Write;

use galmag::chains::product_chain_structure_check;
use galmag::cluster::magnification_tuple;
use galmag::magnification::QuickReason;
use galmag::{parallel, Caps, ExtensionModel, FamilySpec, PermGroup};
use serde::Serialize;
use serde_json::{json, Value};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, clap::ValueEnum)]
#[serde(rename_all = "lowercase")]
pub enum Grid {
    Quick,
    Default,
    Extended,
}

/// Where an expected value comes from.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Source {
    /// A published formula or statement.
    Published,
    /// Brute-force computation.
    Derived,
}

#[derive(Debug, Clone, Serialize)]
pub struct Field {
    pub name: &'static str,
    pub expected: Value,
    pub computed: Value,
    pub source: Source,
}

#[derive(Debug, Clone, Serialize)]
pub struct VerificationRow {
    pub case: String,
    pub family: String,
    pub fields: Vec<Field>,
    pub error: Option<String>,
    pub pass: bool,
}

type Check = Box<dyn Fn(&Caps) -> galmag::Result<Vec<Field>> + Send + Sync>;

pub struct Case {
    pub id: String,
    pub family: String,
    check: Check,
}

impl Case {
    fn new(
        id: impl Into<String>,
        family: impl Into<String>,
        check: impl Fn(&Caps) -> galmag::Result<Vec<Field>> + Send + Sync + 'static,
    ) -> Self {
        Case {
            id: id.into(),
            family: family.into(),
            check: Box::new(check),
        }
    }

    pub fn run(&self, caps: &Caps) -> VerificationRow {
        let (fields, error) = match (self.check)(caps) {
            Ok(f) => (f, None),
            Err(e) => (Vec::new(), Some(e.to_string())),
        };
        let pass = error.is_none() && fields.iter().all(|f| f.expected == f.computed);
        VerificationRow {
            case: self.id.clone(),
            family: self.family.clone(),
            fields,
            error,
            pass,
        }
    }
}

fn field(
    name: &'static str,
    expected: impl Serialize,
    computed: impl Serialize,
    source: Source,
) -> Field {
    Field {
        name,
        expected: json!(expected),
        computed: json!(computed),
        source,
    }
}

use Source::{Derived, Published};

fn falling(n: usize, k: usize) -> usize {
    (n - k + 1..=n).product()
}

fn binom(n: usize, k: usize) -> usize {
    falling(n, k) / (1..=k).product::<usize>()
}

fn semidirect(r: usize, s: usize) -> Case {
    let spec = FamilySpec::SemidirectCluster { r, s };
    Case::new(
        format!("semidirect-{r}-{s}"),
        spec.to_string(),
        move |caps| {
            let m = spec.build(caps)?;
            let i = m.invariants()?;
            let g = m.group();
            Ok(vec![
                field("n", r * s, i.n, Published),
                field("r", r, i.r, Published),
                field("s", s, i.s, Derived),
                field("t", s, i.t, Published),
                field("u", r, i.u, Derived),
                field("transitive", true, g.is_transitive(), Published),
                field(
                    "stabilizer_fixed_points",
                    r,
                    g.point_stabilizer(1)?.fixed_points().len(),
                    Published,
                ),
                field(
                    "chains_meet",
                    true,
                    m.chains_coincide()?.is_some(),
                    Published,
                ),
                field("primitive", true, m.is_primitive()?, Published),
            ])
        },
    )
}

fn sn_tuple(n: usize, k: usize) -> Case {
    let spec = FamilySpec::SnTuple { n, k };
    Case::new(format!("sn_tuple-{n}-{k}"), spec.to_string(), move |caps| {
        let m = spec.build(caps)?;
        let i = m.invariants()?;
        let p = falling(n, k);
        let mut out = vec![
            field("n", p, i.n, Published),
            field("r", falling(k, k), i.r, Published),
            field("s", binom(n, k), i.s, Published),
            field("t", 1, i.t, Published),
            field("u", p, i.u, Published),
            field(
                "general_primitive",
                true,
                m.is_general_primitive()?,
                Published,
            ),
        ];
        if n == 4 {
            let q = m.quick_general_primitive_check()?;
            out.push(field(
                "quick_check",
                Some(QuickReason::NormalsIntersect),
                q,
                Published,
            ));
        }
        Ok(out)
    })
}

fn alt_product(n: usize, k: usize) -> Case {
    let spec = FamilySpec::AltProduct { n, k };
    Case::new(
        format!("alt_product-{n}-{k}"),
        spec.to_string(),
        move |caps| {
            let m = spec.build(caps)?;
            let i = m.invariants()?;
            let (dn, dr) = if k == 1 || k == n - 1 {
                (2 * n, 2)
            } else {
                (4 * binom(n, k), 4)
            };
            Ok(vec![
                field("n", dn, i.n, Published),
                field("r", dr, i.r, Published),
                field(
                    "general_primitive",
                    true,
                    m.is_general_primitive()?,
                    Published,
                ),
            ])
        },
    )
}

/// `(n, r)` and general primitivity for a family with a published pair.
fn degree_cluster(id: String, spec: FamilySpec, n: usize, r: usize) -> Case {
    Case::new(id, spec.to_string(), move |caps| {
        let m = spec.build(caps)?;
        let i = m.invariants()?;
        Ok(vec![
            field("n", n, i.n, Published),
            field("r", r, i.r, Published),
            field(
                "general_primitive",
                true,
                m.is_general_primitive()?,
                Published,
            ),
        ])
    })
}

fn psl2_max(p: usize) -> Case {
    degree_cluster(
        format!("psl2_max-{p}"),
        FamilySpec::Psl2Max { p },
        (p + 1) * (p - 1) / 2,
        (p - 1) / 2,
    )
}

fn psl2_image(p: usize, r: usize) -> Case {
    degree_cluster(
        format!("psl2_borel_image-{p}-{r}"),
        FamilySpec::Psl2BorelImage { p, r },
        r * (p + 1),
        r,
    )
}

fn borel(p: usize, r: usize) -> Case {
    degree_cluster(
        format!("borel-{p}-{r}"),
        FamilySpec::BorelCase { p, r },
        p * r,
        r,
    )
}

/// Borel models with `p ≡ 3 mod 4` and even `r`, which decompose.
fn borel_negative(p: usize, r: usize) -> Case {
    let spec = FamilySpec::BorelCase { p, r };
    Case::new(format!("borel-{p}-{r}"), spec.to_string(), move |caps| {
        let m = spec.build(caps)?;
        let verified = match m.scm_witness()? {
            Some(w) => w.verify(&m)?,
            None => false,
        };
        Ok(vec![
            field(
                "general_primitive",
                false,
                m.is_general_primitive()?,
                Published,
            ),
            field("primitive", false, m.is_primitive()?, Published),
            field("scm_witness_verified", true, verified, Derived),
        ])
    })
}

fn dihedral() -> Case {
    degree_cluster("dihedral4".into(), FamilySpec::Dihedral4, 4, 2)
}

fn cyclic(n: usize, primitive: bool) -> Case {
    let spec = FamilySpec::CyclicGalois { n };
    Case::new(format!("cyclic-{n}"), spec.to_string(), move |caps| {
        let m = spec.build(caps)?;
        Ok(vec![field(
            "primitive",
            primitive,
            m.is_primitive()?,
            Published,
        )])
    })
}

fn an_square(n: usize) -> Case {
    let spec = FamilySpec::AnSquare { n };
    Case::new(format!("an_square-{n}"), spec.to_string(), move |caps| {
        let m = spec.build(caps)?;
        let an = PermGroup::alternating(n)?;
        let one = PermGroup::trivial(n);
        let factor_pair = match m.sgm_witness()? {
            Some(w) => {
                w.a.same_elements(&an.direct_product(&one)?)?
                    && w.b.same_elements(&one.direct_product(&an)?)?
            }
            None => false,
        };
        Ok(vec![
            field("n", n * n, m.invariants()?.n, Derived),
            field("primitive", true, m.is_primitive()?, Published),
            field(
                "general_primitive",
                false,
                m.is_general_primitive()?,
                Published,
            ),
            field("sgm_witness_is_factor_pair", true, factor_pair, Published),
        ])
    })
}

/// Weak magnification of `sn_tuple n k` over `sn_tuple n j`.
fn weak(n: usize, k: usize, j: usize, tuple: Option<[usize; 4]>) -> Case {
    let (big, small) = (
        FamilySpec::SnTuple { n, k },
        FamilySpec::SnTuple { n, k: j },
    );
    Case::new(
        format!("sn_tuple-{n}-{k}-weak-vs-{n}-{j}"),
        format!("{big} / {small}"),
        move |caps| {
            let (m, l) = (big.build(caps)?, small.build(caps)?);
            let (mi, li) = (m.invariants()?, l.invariants()?);
            let got = magnification_tuple(&mi, &li).map(|t| [t.r, t.s, t.t, t.u]);
            Ok(vec![
                field(
                    "weak_cluster",
                    Some(falling(k, k) / falling(j, j)),
                    galmag::cluster::weak_cluster_factor(&mi, &li),
                    Published,
                ),
                field("weak_general_tuple", tuple, got, Published),
            ])
        },
    )
}

fn product(l: FamilySpec, j: FamilySpec) -> Case {
    Case::new(
        format!("product-{}-x-{}", l.name(), j.name()),
        format!("{l} x {j}"),
        move |caps| {
            let (a, b) = (l.build(caps)?, j.build(caps)?);
            let prod: ExtensionModel = a.product(&b)?;
            let want = a.invariants()?.componentwise_product(&b.invariants()?);
            Ok(vec![
                field(
                    "invariants",
                    want.as_tuple(),
                    prod.invariants()?.as_tuple(),
                    Derived,
                ),
                field(
                    "general_primitive",
                    false,
                    prod.is_general_primitive()?,
                    Published,
                ),
                field(
                    "chains_are_products",
                    true,
                    product_chain_structure_check(&a, &b)?,
                    Published,
                ),
            ])
        },
    )
}

pub fn cases(grid: Grid) -> Vec<Case> {
    use FamilySpec as F;
    let quick = grid == Grid::Quick;
    let mut out = Vec::new();

    for r in [2, 3, 4] {
        for s in [2, 3] {
            if quick && r * s > 6 {
                continue;
            }
            out.push(semidirect(r, s));
        }
    }
    if grid == Grid::Extended {
        for (r, s) in [(2, 4), (2, 5), (5, 2), (3, 4), (5, 3)] {
            out.push(semidirect(r, s));
        }
    }

    let n_max = match grid {
        Grid::Quick => 5,
        Grid::Default => 7,
        Grid::Extended => 7,
    };
    for n in 4..=n_max {
        for k in 1..=n - 2 {
            out.push(sn_tuple(n, k));
        }
    }
    for n in 4..=if quick { 5 } else { 6 } {
        for k in 1..n {
            out.push(alt_product(n, k));
        }
    }
    out.push(dihedral());

    let primes: &[usize] = match grid {
        Grid::Quick => &[5, 7],
        Grid::Default => &[5, 7, 11, 13],
        Grid::Extended => &[5, 7, 11, 13, 17, 19],
    };
    out.extend(primes.iter().map(|&p| psl2_max(p)));
    out.push(psl2_image(7, 3));
    if !quick {
        out.push(psl2_image(13, 3));
    }

    let borels: &[(usize, usize)] = match grid {
        Grid::Quick => &[(7, 1), (13, 2)],
        Grid::Default => &[(13, 1), (13, 2), (13, 3), (13, 4), (7, 1), (11, 1), (19, 3)],
        Grid::Extended => &[
            (13, 1),
            (13, 2),
            (13, 3),
            (13, 4),
            (7, 1),
            (11, 1),
            (19, 3),
            (17, 2),
            (17, 4),
            (23, 1),
        ],
    };
    out.extend(borels.iter().map(|&(p, r)| borel(p, r)));
    out.push(borel_negative(7, 2));
    out.push(borel_negative(11, 2));
    if grid == Grid::Extended {
        out.push(borel_negative(19, 2));
        out.push(borel_negative(19, 6));
    }

    for (n, prim) in [
        (9, true),
        (8, true),
        (25, true),
        (6, false),
        (10, false),
        (15, false),
    ] {
        out.push(cyclic(n, prim));
    }
    if grid == Grid::Extended {
        out.push(cyclic(27, true));
        out.push(cyclic(21, false));
    }
    out.push(an_square(5));

    out.push(weak(4, 2, 1, None));
    out.push(weak(5, 3, 2, Some([3, 1, 1, 3])));

    out.push(product(
        F::SemidirectCluster { r: 2, s: 2 },
        F::CyclicGalois { n: 3 },
    ));
    out.push(product(F::SnTuple { n: 4, k: 1 }, F::Dihedral4));
    if !quick {
        out.push(product(F::Psl2Max { p: 5 }, F::BorelCase { p: 7, r: 1 }));
        out.push(product(
            F::SemidirectCluster { r: 3, s: 2 },
            F::SnTuple { n: 4, k: 2 },
        ));
    }
    out
}

pub fn run(grid: Grid, caps: Caps) -> Vec<VerificationRow> {
    let cases = cases(grid);
    parallel::map_ordered(&cases, |c| c.run(&caps))
}

pub fn render(rows: &[VerificationRow]) -> String {
    let mut out = String::new();
    for row in rows {
        let status = if row.pass { "pass" } else { "FAIL" };
        writeln!(out, "{status}  {:<34} {}", row.case, row.family).unwrap();
        if let Some(e) = &row.error {
            writeln!(out, "        error: {e}").unwrap();
        }
        for f in row
            .fields
            .iter()
            .filter(|f| !row.pass || f.expected != f.computed)
        {
            let mark = if f.expected == f.computed { " " } else { "!" };
            writeln!(
                out,
                "      {mark} {:<26} expected {} computed {} ({})",
                f.name,
                f.expected,
                f.computed,
                serde_json::to_value(f.source).unwrap().as_str().unwrap()
            )
            .unwrap();
        }
    }
    let passed = rows.iter().filter(|r| r.pass).count();
    writeln!(out, "{passed}/{} rows pass", rows.len()).unwrap();
    out
}
