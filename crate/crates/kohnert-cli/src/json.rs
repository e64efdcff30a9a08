use kohnert::{
    Cell, Diagram, KohnertSpace, Polynomial, RectificationTrace, SignedKeyExpansion, StratumSplit,
    Tableau, TargetSpace, WeakComposition,
};
use serde_json::{json, Value};

pub fn composition(a: &WeakComposition) -> Value {
    json!(a.parts())
}

pub fn cell(x: Cell) -> Value {
    json!([x.col, x.row])
}

pub fn diagram(d: &Diagram) -> Value {
    Value::Array(d.cells().iter().map(|&x| cell(x)).collect())
}

/// Terms in descending exponent order, matching the text rendering.
pub fn polynomial(p: &Polynomial) -> Value {
    Value::Array(p.terms().rev().map(|(e, c)| json!({"coeff": c, "exp": e})).collect())
}

pub fn expansion(e: &SignedKeyExpansion) -> Value {
    Value::Array(e.terms().map(|(c, b)| json!({"coeff": c, "index": b.parts()})).collect())
}

pub fn kohnert_space(s: &KohnertSpace) -> Value {
    json!({
        "source": composition(&s.source),
        "k": 0,
        "m": 0,
        "count": s.diagrams.len(),
        "diagrams": s.diagrams.iter().map(diagram).collect::<Vec<_>>(),
    })
}

pub fn target_space(s: &TargetSpace) -> Value {
    json!({
        "source": composition(&s.base),
        "k": s.k,
        "m": s.m,
        "count": s.diagrams.len(),
        "diagrams": s.diagrams.iter().map(diagram).collect::<Vec<_>>(),
    })
}

pub fn trace(t: &RectificationTrace) -> Value {
    json!({
        "steps": t.steps.iter().map(|&(a, b)| json!([cell(a), cell(b)])).collect::<Vec<_>>(),
        "result": diagram(&t.result),
    })
}

pub fn split(s: &StratumSplit) -> Value {
    json!({
        "u_plus": diagram(&s.u_plus),
        "u_minus": diagram(&s.u_minus),
        "u_eq_k": s.u_eq_k.iter().map(|&x| cell(x)).collect::<Vec<_>>(),
        "u_plus_star": diagram(&s.u_plus_star),
        "rect_path": s.rect_path.iter().map(|&x| cell(x)).collect::<Vec<_>>(),
    })
}

pub fn tableau(t: &Tableau) -> Value {
    json!(t.rows())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn keypoly_01_descending() {
        let p = kohnert::key_polynomial(&WeakComposition::from([0, 1])).unwrap();
        assert_eq!(
            serde_json::to_string(&polynomial(&p)).unwrap(),
            r#"[{"coeff":1,"exp":[1,0]},{"coeff":1,"exp":[0,1]}]"#
        );
    }

    #[test]
    fn diagram_cells() {
        let d = Diagram::from_pairs(&[(2, 1), (1, 3)]);
        assert_eq!(diagram(&d), json!([[1, 3], [2, 1]]));
    }
}
