//! JSON views of core results.

use cubemorse_core::bigraph::SizeabilityReport;
use cubemorse_core::cover::{CoverProperties, CoverWitness};
use cubemorse_core::morse::{ChamberReport, SimplexCheck, VertexTypeReport, Witness};
use cubemorse_core::Verdict;
use num_bigint::BigInt;
use serde_json::{json, Value};

/// An integer of any width as a JSON number.
pub fn number<T: ToString>(x: T) -> Value {
    Value::Number(x.to_string().parse().expect("integer text is a JSON number"))
}

pub fn verdict(v: Verdict) -> Value {
    Value::from(v.as_str())
}

pub fn witness(w: &Witness) -> Value {
    match w {
        Witness::Empty => json!({ "kind": "empty" }),
        Witness::Components(c) => json!({ "kind": "components", "components": c }),
        Witness::Homology { rank, torsion } => json!({ "kind": "homology", "h1_rank": rank, "torsion": torsion }),
        Witness::Reason(r) => json!({ "kind": "reason", "reason": r }),
    }
}

pub fn witness_line(w: &Witness) -> String {
    match w {
        Witness::Empty => "living link is empty".into(),
        Witness::Components(c) => {
            let parts: Vec<String> = c.iter().map(|comp| format!("{{{}}}", comp.join(", "))).collect();
            format!("{} components: {}", c.len(), parts.join(" "))
        }
        Witness::Homology { rank, torsion } => format!("H1 has rank {rank}, torsion [{}]", torsion.join(", ")),
        Witness::Reason(r) => r.clone(),
    }
}

pub fn simplex_check(c: &SimplexCheck) -> Value {
    json!({
        "vertex": c.vertex,
        "sigma": c.sigma,
        "direction": c.direction.as_str(),
        "required": c.required,
        "verdict": verdict(c.verdict),
        "homological": verdict(c.homological),
        "level": c.level.as_str(),
        "method": c.method,
        "witness": c.witness.as_ref().map(witness),
    })
}

pub fn simplex_check_line(c: &SimplexCheck) -> String {
    let sigma = if c.sigma.is_empty() { "empty simplex".to_string() } else { format!("σ = {{{}}}", c.sigma.join(", ")) };
    let w = c.witness.as_ref().map(witness_line).unwrap_or_else(|| c.level.as_str().to_string());
    format!("at {} {}, {} link needs level {}: {}", c.vertex, sigma, c.direction.as_str(), c.required, w)
}

pub fn vertex_type(t: &VertexTypeReport) -> Value {
    json!({
        "type": t.vertex_type,
        "representative": t.representative,
        "engine": t.engine.as_str(),
        "vertices_checked": t.vertices_checked,
        "dead_simplices": t.dead_simplices,
        "checks_run": t.checks_run,
        "verdict": verdict(t.verdict),
        "homological": verdict(t.homological),
        "issues": t.issues.iter().map(simplex_check).collect::<Vec<_>>(),
    })
}

pub fn chamber(c: &ChamberReport) -> Value {
    let flagged: Vec<Value> = c
        .vertex_types
        .iter()
        .filter(|t| !t.verdict.is_pass() || !t.homological.is_pass())
        .map(vertex_type)
        .collect();
    json!({
        "signs": c.signs,
        "lambda": c.lambda.to_string(),
        "homological": verdict(c.homological),
        "vertex_types": c.vertex_types.len(),
        "dead_simplices": c.vertex_types.iter().map(|t| t.dead_simplices).sum::<usize>(),
        "checks_run": c.vertex_types.iter().map(|t| t.checks_run).sum::<usize>(),
        "flagged_types": flagged,
    })
}

pub fn chamber_line(c: &ChamberReport) -> String {
    let first = c.vertex_types.iter().find_map(|t| t.issues.first().map(|i| (t, i)));
    match first {
        Some((t, i)) => format!("{}: {}", t.vertex_type, simplex_check_line(i)),
        None => format!(
            "λ = ({}), {} vertex types, {} checks",
            c.lambda,
            c.vertex_types.len(),
            c.vertex_types.iter().map(|t| t.checks_run).sum::<usize>()
        ),
    }
}

pub fn sizeability(r: &SizeabilityReport) -> Value {
    let failing: Vec<Value> = r
        .spans
        .iter()
        .filter(|s| !s.verdict.is_pass())
        .map(|s| {
            json!({
                "pair": s.pair.to_string(),
                "verdict": verdict(s.verdict),
                "component": s.witness.as_ref().map(|w| w.component.clone()),
                "outside": s.witness.as_ref().and_then(|w| w.outside.clone()),
            })
        })
        .collect();
    let min_degree = r.neighbor_counts.values().map(|&(lo, _)| lo).min();
    json!({
        "backend": r.backend.as_str(),
        "morse_suited": verdict(r.morse_suited),
        "morse_violation": r.morse_violation.as_ref().map(|v| v.to_string()),
        "four_cycle_free": verdict(r.four_cycle_free),
        "four_cycle": r.four_cycle.as_ref().map(|c| json!({ "vertices": c.vertices, "case": c.case })),
        "span_connectivity": verdict(r.span_connectivity()),
        "spans_checked": r.spans.len(),
        "failing_spans": failing,
        "min_neighbours_in_opposite_block": min_degree.map(number),
        "spans_certified": r.spans_certified(),
    })
}

pub fn sizeability_line(r: &SizeabilityReport) -> String {
    if let Some(v) = &r.morse_violation {
        return format!("not Morse-suited: {v}");
    }
    if let Some(c) = &r.four_cycle {
        return format!("4-cycle {}", c.vertices.join(" - "));
    }
    if let Some(s) = r.spans.iter().find(|s| !s.verdict.is_pass()) {
        let size = s.witness.as_ref().map_or(0, |w| w.component.len());
        return format!("span of {} is disconnected (a component of {size} vertices)", s.pair);
    }
    format!("{} spans connected, no 4-cycles", r.spans.len())
}

pub fn cover_witness(w: &CoverWitness) -> Value {
    match w {
        CoverWitness::LocalBijectivity { vertex, base_neighbor, found } => {
            json!({ "kind": "local_bijectivity", "vertex": vertex, "base_neighbor": base_neighbor, "found": found })
        }
        CoverWitness::Disconnected { components, component_size } => {
            json!({ "kind": "disconnected", "components": components, "component_size": component_size })
        }
        CoverWitness::FourCycle { base, net_voltage, lift_length } => {
            json!({ "kind": "four_cycle", "base": base, "net_voltage": net_voltage, "lift_length": lift_length })
        }
    }
}

pub fn cover_properties(p: &CoverProperties) -> Value {
    json!({
        "local_bijectivity": verdict(p.local_bijectivity),
        "connected": verdict(p.connected),
        "four_cycles_unwind": verdict(p.four_cycles),
        "base_four_cycles": p.base_four_cycles,
        "witnesses": p.witnesses.iter().map(cover_witness).collect::<Vec<_>>(),
    })
}

pub fn counts(c: &[BigInt; 4]) -> Value {
    let chi = &c[0] - &c[1] + &c[2] - &c[3];
    json!({ "V": number(&c[0]), "E": number(&c[1]), "F": number(&c[2]), "C": number(&c[3]), "chi": number(chi) })
}

pub fn chi(c: &[BigInt; 4]) -> BigInt {
    &c[0] - &c[1] + &c[2] - &c[3]
}
