//! JSON fragments shared by the subcommands.

use cordial::extremal::EmpiricalMax;
use cordial::labeling::{self, EdgeLabelRule, Property, Verdict};
use cordial::preserver;
use cordial::{to_graph6, Graph, LinearOperator};
use serde_json::{json, Value};

use crate::Failure;

pub fn edges_json(edges: &[(usize, usize)]) -> Value {
    Value::Array(edges.iter().map(|&(i, j)| json!([i, j])).collect())
}

pub fn graph_json(g: &Graph) -> Value {
    json!({
        "n": g.n(),
        "graph6": to_graph6(g),
        "edges": edges_json(&g.edge_list()),
    })
}

pub fn verdict_json(g: &Graph, property: Property, v: &Verdict) -> Value {
    let witness = v.witness.as_ref().map(|w| {
        let n = g.n();
        let mut out = json!({
            "graph6": to_graph6(g),
            "labeling": w.labeling.to_bitstring(n),
            "verified": labeling::verify_witness(g, property, w),
        });
        match (&w.orientation, property) {
            (Some(o), _) => {
                let arcs = o.arcs(g);
                let mut counts = [0usize; 3];
                for &(t, h) in &arcs {
                    let d = EdgeLabelRule::SignedDifference.label(w.labeling.label(t), w.labeling.label(h));
                    counts[(d + 1) as usize] += 1;
                }
                out["orientation"] = json!(o.to_bitstring());
                out["arcs"] = edges_json(&arcs);
                out["arc_label_counts"] = json!({ "-1": counts[0], "0": counts[1], "1": counts[2] });
            }
            (None, Property::Sum | Property::Product) => {
                let rule = if property == Property::Sum { EdgeLabelRule::SumMod2 } else { EdgeLabelRule::Product };
                if let Ok([zero, one]) = labeling::induced_edge_counts(g, &w.labeling, rule) {
                    out["edge_label_counts"] = json!({ "0": zero, "1": one });
                }
            }
            (None, Property::Orient23) => {}
        }
        out
    });
    json!({
        "decision": v.decision,
        "labelings_examined": v.labelings_examined,
        "witness": witness,
    })
}

pub fn empirical_json(e: &EmpiricalMax) -> Result<Value, Failure> {
    let verdict = e.property.check(&e.witness)?;
    let exhausted: Vec<Value> =
        e.exhausted.iter().map(|c| json!({ "edges": c.edges, "classes": c.classes })).collect();
    Ok(json!({
        "n": e.n,
        "max_edges": e.max_edges,
        "witness_graph": graph_json(&e.witness),
        "witness": verdict_json(&e.witness, e.property, &verdict)["witness"].clone(),
        "exhausted_levels": exhausted,
    }))
}

pub fn operator_json(op: &LinearOperator) -> Value {
    let table: Vec<String> = op.to_table().lines().map(str::to_owned).collect();
    let perm = preserver::is_vertex_permutation(op);
    json!({
        "n": op.n(),
        "table": table,
        "edge_bijection": op.is_edge_bijection(),
        "vertex_permutation": perm.is_some(),
        "permutation": perm,
    })
}
