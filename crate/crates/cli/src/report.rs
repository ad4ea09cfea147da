//! Per-model reports and their text rendering.

use std::fmt::Write;

use galmag::chains::ChainLink;
use galmag::cluster::{magnification_tuple, weak_cluster_factor};
use galmag::magnification::enumerate_decompositions;
use galmag::{
    ClusterInvariants, DecompositionWitness, ExtensionModel, MagnificationKind, MagnificationTuple,
    PermGroup,
};
use serde::Serialize;

use crate::CmdResult;

fn gens(g: &PermGroup) -> Vec<String> {
    g.generators().iter().map(|p| p.to_string()).collect()
}

#[derive(Debug, Clone, Serialize)]
pub struct WitnessReport {
    pub kind: MagnificationKind,
    pub a_order: usize,
    pub b_order: usize,
    pub a_generators: Vec<String>,
    pub b_generators: Vec<String>,
    pub indices: [usize; 2],
}

impl WitnessReport {
    pub fn from_witness(w: &DecompositionWitness) -> CmdResult<Self> {
        Ok(WitnessReport {
            kind: w.kind,
            a_order: w.a.order()?,
            b_order: w.b.order()?,
            a_generators: gens(&w.a),
            b_generators: gens(&w.b),
            indices: [w.indices.0, w.indices.1],
        })
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct Witnesses {
    pub scm: Option<WitnessReport>,
    pub sgm: Option<WitnessReport>,
}

#[derive(Debug, Clone, Serialize)]
pub struct Coincidence {
    pub order: usize,
    pub descending_index: usize,
    pub ascending_index: usize,
}

#[derive(Debug, Clone, Serialize)]
pub struct ChainReport {
    pub model: String,
    pub group_order: usize,
    pub descending: Vec<ChainLink>,
    pub ascending: Vec<ChainLink>,
    pub coincidence: Option<Coincidence>,
}

impl ChainReport {
    pub fn build(label: &str, m: &ExtensionModel) -> CmdResult<Self> {
        let order = m.group().order()?;
        let coincidence = match m.chains_coincide()? {
            Some(c) => Some(Coincidence {
                order: c.subgroup.order()?,
                descending_index: c.descending_index,
                ascending_index: c.ascending_index,
            }),
            None => None,
        };
        Ok(ChainReport {
            model: label.to_string(),
            group_order: order,
            descending: m.descending_chain()?.links(order)?,
            ascending: m.ascending_chain()?.links(order)?,
            coincidence,
        })
    }

    pub fn render(&self) -> String {
        let mut out = String::new();
        writeln!(out, "model        {}", self.model).unwrap();
        writeln!(out, "|G|          {}", self.group_order).unwrap();
        for (name, links) in [
            ("descending", &self.descending),
            ("ascending", &self.ascending),
        ] {
            writeln!(out, "{name}").unwrap();
            for (i, l) in links.iter().enumerate() {
                writeln!(
                    out,
                    "  {i:>2}  order {:<8} index {:<8} {}",
                    l.order,
                    l.index_in_group,
                    l.generators.join(" ")
                )
                .unwrap();
            }
        }
        match &self.coincidence {
            Some(c) => writeln!(
                out,
                "chains meet  order {} (descending {}, ascending {})",
                c.order, c.descending_index, c.ascending_index
            )
            .unwrap(),
            None => writeln!(out, "chains meet  no").unwrap(),
        }
        out
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct ModelReport {
    pub model: String,
    pub invariants: ClusterInvariants,
    pub primitive: bool,
    pub general_primitive: bool,
    pub witnesses: Witnesses,
    pub descending_orders: Vec<usize>,
    pub ascending_orders: Vec<usize>,
    pub chains_meet: Option<usize>,
    pub oracle_r: usize,
}

impl ModelReport {
    pub fn build(label: &str, m: &ExtensionModel) -> CmdResult<Self> {
        let scm = m.scm_witness()?;
        let sgm = m.sgm_witness()?;
        let chains_meet = match m.chains_coincide()? {
            Some(c) => Some(c.subgroup.order()?),
            None => None,
        };
        Ok(ModelReport {
            model: label.to_string(),
            invariants: m.invariants()?,
            primitive: scm.is_none(),
            general_primitive: sgm.is_none(),
            witnesses: Witnesses {
                scm: scm.as_ref().map(WitnessReport::from_witness).transpose()?,
                sgm: sgm.as_ref().map(WitnessReport::from_witness).transpose()?,
            },
            descending_orders: m.descending_chain()?.orders()?,
            ascending_orders: m.ascending_chain()?.orders()?,
            chains_meet,
            oracle_r: m.fixed_point_cluster_size()?,
        })
    }

    pub fn render(&self) -> String {
        let i = &self.invariants;
        let mut out = String::new();
        let mut row = |k: &str, v: String| writeln!(out, "{k:<18} {v}").unwrap();
        row("model", self.model.clone());
        row("degree n", i.n.to_string());
        row("cluster size r", i.r.to_string());
        row("clusters s", i.s.to_string());
        row("ascending index t", i.t.to_string());
        row("u", i.u.to_string());
        row("primitive", self.primitive.to_string());
        row("general primitive", self.general_primitive.to_string());
        for (name, w) in [
            ("SCM witness", &self.witnesses.scm),
            ("SGM witness", &self.witnesses.sgm),
        ] {
            row(
                name,
                match w {
                    Some(w) => format!(
                        "|A|={} |B|={} indices ({}, {}) A=<{}> B=<{}>",
                        w.a_order,
                        w.b_order,
                        w.indices[0],
                        w.indices[1],
                        w.a_generators.join(", "),
                        w.b_generators.join(", ")
                    ),
                    None => "none".into(),
                },
            );
        }
        row("descending orders", format!("{:?}", self.descending_orders));
        row("ascending orders", format!("{:?}", self.ascending_orders));
        row(
            "chains meet",
            self.chains_meet
                .map_or("no".into(), |o| format!("order {o}")),
        );
        row("fixed points (r)", self.oracle_r.to_string());
        out
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct Factor {
    pub a_order: usize,
    pub b_order: usize,
    pub a_generators: Vec<String>,
    pub b_generators: Vec<String>,
}

#[derive(Debug, Clone, Serialize)]
pub struct DecompositionReport {
    pub model: String,
    pub group_order: usize,
    /// Ordered pairs, trivial factors included.
    pub pairs: Vec<Factor>,
    pub nontrivial_unordered: usize,
}

impl DecompositionReport {
    pub fn build(label: &str, g: &PermGroup) -> CmdResult<Self> {
        let order = g.order()?;
        let mut pairs = Vec::new();
        for (a, b) in enumerate_decompositions(g)? {
            pairs.push(Factor {
                a_order: a.order()?,
                b_order: b.order()?,
                a_generators: gens(&a),
                b_generators: gens(&b),
            });
        }
        let nontrivial = pairs
            .iter()
            .filter(|p| p.a_order > 1 && p.b_order > 1)
            .count()
            / 2;
        Ok(DecompositionReport {
            model: label.to_string(),
            group_order: order,
            pairs,
            nontrivial_unordered: nontrivial,
        })
    }

    pub fn render(&self) -> String {
        let mut out = String::new();
        writeln!(out, "model        {}", self.model).unwrap();
        writeln!(out, "|G|          {}", self.group_order).unwrap();
        for p in &self.pairs {
            writeln!(
                out,
                "  |A|={:<6} |B|={:<6} A=<{}> B=<{}>",
                p.a_order,
                p.b_order,
                p.a_generators.join(", "),
                p.b_generators.join(", ")
            )
            .unwrap();
        }
        writeln!(
            out,
            "nontrivial unordered pairs: {}",
            self.nontrivial_unordered
        )
        .unwrap();
        out
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct WeakReport {
    pub larger: String,
    pub smaller: String,
    pub larger_invariants: ClusterInvariants,
    pub smaller_invariants: ClusterInvariants,
    pub cluster_factor: Option<usize>,
    pub general_tuple: Option<MagnificationTuple>,
}

impl WeakReport {
    pub fn build(
        (ml, m): (&str, &ExtensionModel),
        (ll, l): (&str, &ExtensionModel),
    ) -> CmdResult<Self> {
        let (mi, li) = (m.invariants()?, l.invariants()?);
        Ok(WeakReport {
            larger: ml.to_string(),
            smaller: ll.to_string(),
            larger_invariants: mi,
            smaller_invariants: li,
            cluster_factor: weak_cluster_factor(&mi, &li),
            general_tuple: magnification_tuple(&mi, &li),
        })
    }

    pub fn render(&self) -> String {
        let mut out = String::new();
        let (m, l) = (
            self.larger_invariants.as_tuple(),
            self.smaller_invariants.as_tuple(),
        );
        writeln!(out, "larger   {}  (n,r,s,t,u) = {m:?}", self.larger).unwrap();
        writeln!(out, "smaller  {}  (n,r,s,t,u) = {l:?}", self.smaller).unwrap();
        writeln!(
            out,
            "weak cluster factor   {}",
            self.cluster_factor
                .map_or("absent".into(), |f| f.to_string())
        )
        .unwrap();
        writeln!(
            out,
            "weak general tuple    {}",
            self.general_tuple.map_or("absent".into(), |t| format!(
                "(r,s,t,u) = ({}, {}, {}, {})",
                t.r, t.s, t.t, t.u
            ))
        )
        .unwrap();
        out
    }
}
