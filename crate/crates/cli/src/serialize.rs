//! Stable serializations: graph/path/verdict JSON, Graphviz DOT, and the
//! plain-text reports. All collections arrive ordered from the core, so
//! repeated runs are byte-identical.

use anyhow::{anyhow, bail, Result};
use serde::{Deserialize, Serialize};

use met_atlas_core::graph::{GraphEdge, GraphPath, Move, ResolutionGraph};
use met_atlas_core::group::{MatrixGroup, Verdict};
use met_atlas_core::orbit::{Algebra, AlgebraKind, EdgeClass, NilpotentOrbit};
use met_atlas_core::polarization::{FlagType, Resolution, Sign};
use met_atlas_core::Partition;

fn algebra_name(kind: AlgebraKind) -> &'static str {
    match kind {
        AlgebraKind::Sl => "sl",
        AlgebraKind::So => "so",
        AlgebraKind::Sp => "sp",
    }
}

fn algebra_kind(name: &str) -> Result<AlgebraKind> {
    match name {
        "sl" => Ok(AlgebraKind::Sl),
        "so" => Ok(AlgebraKind::So),
        "sp" => Ok(AlgebraKind::Sp),
        other => bail!("unknown algebra {other:?}"),
    }
}

#[derive(Debug, Serialize, Deserialize, PartialEq, Eq)]
pub struct NodeDto {
    pub label: String,
    pub kind: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub flag: Option<Vec<usize>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub half: Option<Vec<usize>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub middle: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub sign: Option<String>,
}

#[derive(Debug, Serialize, Deserialize, PartialEq, Eq)]
pub struct MoveDto {
    pub kind: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub j: Option<usize>,
}

#[derive(Debug, Serialize, Deserialize, PartialEq, Eq)]
pub struct EdgeDto {
    pub a: usize,
    pub b: usize,
    pub class: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub center: Option<Vec<usize>>,
    #[serde(rename = "move")]
    pub mv: MoveDto,
}

#[derive(Debug, Serialize, Deserialize, PartialEq, Eq)]
pub struct GraphDto {
    pub algebra: String,
    pub n: usize,
    pub partition: Vec<usize>,
    pub nodes: Vec<NodeDto>,
    pub edges: Vec<EdgeDto>,
}

fn node_dto(node: &Resolution) -> NodeDto {
    match &node.flag {
        FlagType::Linear { parts } => NodeDto {
            label: node.label.clone(),
            kind: "linear".into(),
            flag: Some(parts.clone()),
            half: None,
            middle: None,
            sign: None,
        },
        FlagType::Isotropic { half, middle, sign } => NodeDto {
            label: node.label.clone(),
            kind: "isotropic".into(),
            flag: None,
            half: Some(half.clone()),
            middle: Some(*middle),
            sign: sign.map(|s| s.to_string()),
        },
    }
}

fn edge_dto(edge: &GraphEdge) -> EdgeDto {
    let (class, center) = match &edge.class {
        EdgeClass::Isomorphism => ("isomorphism", None),
        EdgeClass::IsoCodim2 => ("iso_codim2", None),
        EdgeClass::Met { center } => ("met", Some(center.parts().to_vec())),
    };
    let mv = match edge.mv {
        Move::Swap { j } => MoveDto {
            kind: "swap".into(),
            j: Some(j),
        },
        Move::SignFlip => MoveDto {
            kind: "sign_flip".into(),
            j: None,
        },
    };
    EdgeDto {
        a: edge.a,
        b: edge.b,
        class: class.into(),
        center,
        mv,
    }
}

pub fn graph_to_dto(graph: &ResolutionGraph) -> GraphDto {
    GraphDto {
        algebra: algebra_name(graph.orbit.algebra().kind()).into(),
        n: graph.orbit.algebra().n(),
        partition: graph.orbit.jordan_type().parts().to_vec(),
        nodes: graph.nodes.iter().map(node_dto).collect(),
        edges: graph.edges.iter().map(edge_dto).collect(),
    }
}

/// Rebuilds a core graph from its JSON form; used to guarantee the
/// serialization round-trips.
pub fn graph_from_json(raw: &str) -> Result<ResolutionGraph> {
    let dto: GraphDto = serde_json::from_str(raw)?;
    let algebra = Algebra::new(algebra_kind(&dto.algebra)?, dto.n).map_err(|e| anyhow!("{e}"))?;
    let parts: Vec<i64> = dto.partition.iter().map(|&v| v as i64).collect();
    let orbit = NilpotentOrbit::new(algebra, Partition::new(&parts).map_err(|e| anyhow!("{e}"))?)
        .map_err(|e| anyhow!("{e}"))?;
    let mut nodes = Vec::with_capacity(dto.nodes.len());
    for n in &dto.nodes {
        let flag = match n.kind.as_str() {
            "linear" => FlagType::Linear {
                parts: n
                    .flag
                    .clone()
                    .ok_or_else(|| anyhow!("linear node lacks flag"))?,
            },
            "isotropic" => FlagType::Isotropic {
                half: n
                    .half
                    .clone()
                    .ok_or_else(|| anyhow!("isotropic node lacks half"))?,
                middle: n
                    .middle
                    .ok_or_else(|| anyhow!("isotropic node lacks middle"))?,
                sign: match n.sign.as_deref() {
                    None => None,
                    Some("+") => Some(Sign::Plus),
                    Some("-") => Some(Sign::Minus),
                    Some(other) => bail!("unknown sign {other:?}"),
                },
            },
            other => bail!("unknown node kind {other:?}"),
        };
        let node = Resolution::new(orbit.clone(), flag);
        if node.label != n.label {
            bail!("label mismatch: {} vs {}", node.label, n.label);
        }
        nodes.push(node);
    }
    let mut edges = Vec::with_capacity(dto.edges.len());
    for e in &dto.edges {
        let class = match e.class.as_str() {
            "isomorphism" => EdgeClass::Isomorphism,
            "iso_codim2" => EdgeClass::IsoCodim2,
            "met" => {
                let center = e
                    .center
                    .clone()
                    .ok_or_else(|| anyhow!("met edge lacks center"))?;
                let parts: Vec<i64> = center.iter().map(|&v| v as i64).collect();
                EdgeClass::Met {
                    center: Partition::new(&parts).map_err(|err| anyhow!("{err}"))?,
                }
            }
            other => bail!("unknown edge class {other:?}"),
        };
        let mv = match e.mv.kind.as_str() {
            "swap" => Move::Swap {
                j: e.mv.j.ok_or_else(|| anyhow!("swap move lacks j"))?,
            },
            "sign_flip" => Move::SignFlip,
            other => bail!("unknown move {other:?}"),
        };
        edges.push(GraphEdge {
            a: e.a,
            b: e.b,
            class,
            mv,
        });
    }
    Ok(ResolutionGraph {
        orbit,
        nodes,
        edges,
    })
}

pub fn graph_json(graph: &ResolutionGraph) -> Result<String> {
    let mut out = serde_json::to_string_pretty(&graph_to_dto(graph))?;
    out.push('\n');
    Ok(out)
}

fn partition_str(p: &Partition) -> String {
    format!("{}", p)
}

/// Graphviz output: MET edges solid with the center as label, isomorphisms
/// in codimension 2 dashed, plain isomorphisms dotted, the type-D flop
/// annotated.
pub fn graph_dot(graph: &ResolutionGraph) -> String {
    let mut out = String::from("graph met_atlas {\n");
    out.push_str(&format!(
        "  graph [label=\"{} orbit {}\"];\n",
        graph.orbit.algebra(),
        partition_str(graph.orbit.jordan_type())
    ));
    for (i, node) in graph.nodes.iter().enumerate() {
        out.push_str(&format!("  n{} [label=\"{}\"];\n", i, node.label));
    }
    for e in &graph.edges {
        let attrs = match (&e.class, e.mv) {
            (EdgeClass::Met { center }, _) => {
                format!("style=solid, label=\"MET {}\"", partition_str(center))
            }
            (EdgeClass::IsoCodim2, Move::SignFlip) => "style=dashed, label=\"D-flop\"".to_string(),
            (EdgeClass::IsoCodim2, _) => "style=dashed".to_string(),
            (EdgeClass::Isomorphism, _) => "style=dotted".to_string(),
        };
        out.push_str(&format!("  n{} -- n{} [{}];\n", e.a, e.b, attrs));
    }
    out.push_str("}\n");
    out
}

pub fn graph_text(graph: &ResolutionGraph) -> String {
    let mut out = format!(
        "resolution graph of {}: {} node(s), {} edge(s)\n",
        graph.orbit,
        graph.nodes.len(),
        graph.edges.len()
    );
    for node in &graph.nodes {
        out.push_str(&format!(
            "  node {}  jumps {:?}\n",
            node.label,
            node.flag.expanded()
        ));
    }
    for e in &graph.edges {
        out.push_str(&format!(
            "  {} -- {}  {}\n",
            graph.nodes[e.a].label,
            graph.nodes[e.b].label,
            edge_text(e)
        ));
    }
    out
}

fn edge_text(e: &GraphEdge) -> String {
    let class = match &e.class {
        EdgeClass::Isomorphism => "isomorphism".to_string(),
        EdgeClass::IsoCodim2 => "isomorphism in codim 2".to_string(),
        EdgeClass::Met { center } => format!("MET center {}", partition_str(center)),
    };
    match e.mv {
        Move::Swap { j } => format!("{} (swap at {})", class, j),
        Move::SignFlip => format!("{} (D-flop)", class),
    }
}

#[derive(Debug, Serialize)]
struct HopDto {
    from: String,
    to: String,
    class: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    center: Option<Vec<usize>>,
    #[serde(rename = "move")]
    mv: MoveDto,
}

#[derive(Debug, Serialize)]
struct PathDto {
    algebra: String,
    n: usize,
    partition: Vec<usize>,
    nodes: Vec<String>,
    hops: Vec<HopDto>,
    net_centers: Vec<Vec<usize>>,
}

pub fn path_json(
    graph: &ResolutionGraph,
    path: &GraphPath,
    centers: &[Partition],
) -> Result<String> {
    let mut hops = Vec::new();
    for (step, e) in path.edges.iter().enumerate() {
        let dto = edge_dto(e);
        hops.push(HopDto {
            from: graph.nodes[path.nodes[step]].label.clone(),
            to: graph.nodes[path.nodes[step + 1]].label.clone(),
            class: dto.class,
            center: dto.center,
            mv: dto.mv,
        });
    }
    let dto = PathDto {
        algebra: algebra_name(graph.orbit.algebra().kind()).into(),
        n: graph.orbit.algebra().n(),
        partition: graph.orbit.jordan_type().parts().to_vec(),
        nodes: path
            .nodes
            .iter()
            .map(|&i| graph.nodes[i].label.clone())
            .collect(),
        hops,
        net_centers: centers.iter().map(|c| c.parts().to_vec()).collect(),
    };
    let mut out = serde_json::to_string_pretty(&dto)?;
    out.push('\n');
    Ok(out)
}

pub fn path_text(graph: &ResolutionGraph, path: &GraphPath, centers: &[Partition]) -> String {
    let mut out = String::new();
    if path.edges.is_empty() {
        out.push_str(&format!(
            "empty path at {}\n",
            graph.nodes[path.nodes[0]].label
        ));
    } else {
        out.push_str(&format!("path with {} move(s):\n", path.edges.len()));
        for (step, e) in path.edges.iter().enumerate() {
            out.push_str(&format!(
                "  {} --> {}  {}\n",
                graph.nodes[path.nodes[step]].label,
                graph.nodes[path.nodes[step + 1]].label,
                edge_text(e)
            ));
        }
    }
    if centers.is_empty() {
        out.push_str("net MET centers: none (isomorphism in codim 2 overall)\n");
    } else {
        let list: Vec<String> = centers.iter().map(partition_str).collect();
        out.push_str(&format!("net MET centers: {}\n", list.join(" ")));
    }
    out
}

#[derive(Debug, Serialize)]
struct OrbitDimDto {
    algebra: String,
    n: usize,
    partition: Vec<usize>,
    dimension: usize,
}

pub fn orbit_dim_json(orbit: &NilpotentOrbit, dim: usize) -> Result<String> {
    let dto = OrbitDimDto {
        algebra: algebra_name(orbit.algebra().kind()).into(),
        n: orbit.algebra().n(),
        partition: orbit.jordan_type().parts().to_vec(),
        dimension: dim,
    };
    let mut out = serde_json::to_string_pretty(&dto)?;
    out.push('\n');
    Ok(out)
}

#[derive(Debug, Serialize)]
struct StrataDto {
    algebra: String,
    n: usize,
    partition: Vec<usize>,
    strata: Vec<Vec<usize>>,
}

pub fn strata_json(orbit: &NilpotentOrbit, strata: &[Partition]) -> Result<String> {
    let dto = StrataDto {
        algebra: algebra_name(orbit.algebra().kind()).into(),
        n: orbit.algebra().n(),
        partition: orbit.jordan_type().parts().to_vec(),
        strata: strata.iter().map(|s| s.parts().to_vec()).collect(),
    };
    let mut out = serde_json::to_string_pretty(&dto)?;
    out.push('\n');
    Ok(out)
}

#[derive(Debug, Serialize)]
struct PolarizationsDto {
    algebra: String,
    n: usize,
    partition: Vec<usize>,
    polarizations: Vec<NodeDto>,
}

pub fn polarizations_json(orbit: &NilpotentOrbit, flags: &[FlagType]) -> Result<String> {
    let dto = PolarizationsDto {
        algebra: algebra_name(orbit.algebra().kind()).into(),
        n: orbit.algebra().n(),
        partition: orbit.jordan_type().parts().to_vec(),
        polarizations: flags
            .iter()
            .map(|f| node_dto(&Resolution::new(orbit.clone(), f.clone())))
            .collect(),
    };
    let mut out = serde_json::to_string_pretty(&dto)?;
    out.push('\n');
    Ok(out)
}

#[derive(Debug, Serialize)]
struct WitnessDto {
    subspace_basis: Vec<Vec<Vec<String>>>,
    subspace_dim: usize,
    element_count: usize,
    class_count: usize,
    single_class: bool,
}

#[derive(Debug, Serialize)]
struct VerdictDto {
    group_order: usize,
    dim: usize,
    cyclotomic_order: usize,
    conjugacy_class_count: usize,
    condition_holds: bool,
    codim2_witnesses: Vec<WitnessDto>,
    reflection_single_class: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    gl2_uniqueness: Option<bool>,
}

pub fn verdict_json(group: &MatrixGroup, verdict: &Verdict) -> Result<String> {
    let witnesses = verdict
        .witnesses
        .iter()
        .map(|w| {
            let basis = w.subspace.basis();
            let rows = (0..basis.rows())
                .map(|r| {
                    basis
                        .row(r)
                        .iter()
                        .map(|c| c.coeffs().iter().map(|q| q.to_string()).collect())
                        .collect()
                })
                .collect();
            WitnessDto {
                subspace_basis: rows,
                subspace_dim: w.subspace.dim(),
                element_count: w.elements.len(),
                class_count: w.class_count,
                single_class: w.single_class,
            }
        })
        .collect();
    let dto = VerdictDto {
        group_order: group.order(),
        dim: group.dim(),
        cyclotomic_order: group.field().order(),
        conjugacy_class_count: group.conjugacy_classes().len(),
        condition_holds: verdict.condition_holds,
        codim2_witnesses: witnesses,
        reflection_single_class: verdict.reflection_single_class,
        gl2_uniqueness: verdict.gl2_uniqueness,
    };
    let mut out = serde_json::to_string_pretty(&dto)?;
    out.push('\n');
    Ok(out)
}

pub fn verdict_text(group: &MatrixGroup, verdict: &Verdict) -> String {
    let mut out = format!(
        "group of order {} in GL({}) over Q(zeta_{}), {} conjugacy classes\n",
        group.order(),
        group.dim(),
        group.field().order(),
        group.conjugacy_classes().len()
    );
    out.push_str(&format!(
        "codim-2 single-class condition: {}\n",
        if verdict.condition_holds {
            "holds"
        } else {
            "fails"
        }
    ));
    for w in &verdict.witnesses {
        out.push_str(&format!(
            "  fixed space of dim {}: {} element(s) in {} class(es){}\n",
            w.subspace.dim(),
            w.elements.len(),
            w.class_count,
            if w.single_class {
                ""
            } else {
                "  <- not a single class"
            }
        ));
    }
    out.push_str(&format!(
        "complex reflections form a single class: {}\n",
        verdict.reflection_single_class
    ));
    if let Some(unique) = verdict.gl2_uniqueness {
        out.push_str(&format!(
            "(T*C^2)/G has at most one projective symplectic resolution: {}\n",
            unique
        ));
    }
    out
}
