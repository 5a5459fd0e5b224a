//! DOT and JSON output for quivers with relations.

use crate::exactla::Field;
use crate::quivalg::{AlgebraPresentation, QuiverJson};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Format {
    Dot,
    Json,
}

impl std::str::FromStr for Format {
    type Err = crate::Error;
    fn from_str(s: &str) -> crate::Result<Self> {
        match s {
            "dot" => Ok(Format::Dot),
            "json" => Ok(Format::Json),
            _ => Err(crate::Error::InvalidInput(format!("unknown format {s}, expected dot or json"))),
        }
    }
}

pub fn emit<F: Field>(a: &AlgebraPresentation<F>, format: Format) -> String {
    match format {
        Format::Json => QuiverJson::from_presentation(a).to_json(),
        Format::Dot => to_dot(a),
    }
}

fn escape(s: &str) -> String {
    s.replace('\\', "\\\\").replace('"', "\\\"")
}

pub fn to_dot<F: Field>(a: &AlgebraPresentation<F>) -> String {
    let q = &a.quiver;
    let mut out = String::from("digraph Q {\n");
    if !q.vertices.is_empty() {
        out.push_str("  rankdir=LR;\n");
    }
    for (i, v) in q.vertices.iter().enumerate() {
        out.push_str(&format!("  v{i} [label=\"{}\"];\n", escape(&v.label)));
    }
    for ar in &q.arrows {
        out.push_str(&format!("  v{} -> v{} [label=\"{}\"];\n", ar.source, ar.target, escape(&ar.label)));
    }
    for r in &a.relations {
        let terms: Vec<String> =
            r.terms.iter().map(|(c, p)| format!("{}*{}", a.field.format(c), q.path_labels(p).join("."))).collect();
        out.push_str(&format!("  // {}\n", terms.join(" + ")));
    }
    out.push_str("}\n");
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactla::Rationals;
    use crate::quivalg::Quiver;
    use crate::squid::{build_pd_squid, SquidSpec};

    #[test]
    fn empty_quiver() {
        let a = AlgebraPresentation::free(Rationals, Quiver::new());
        assert_eq!(to_dot(&a), "digraph Q {\n}\n");
    }

    #[test]
    fn example_output() {
        let s = SquidSpec::new(2, vec![vec![1, 0, 0], vec![0, 1, 0]], vec![3, 3]);
        let a = build_pd_squid(&Rationals, &s).unwrap();
        let dot = emit(&a, Format::Dot);
        assert_eq!(dot.lines().filter(|l| l.contains("[label=") && !l.contains("->")).count(), 15);
        assert_eq!(dot, emit(&build_pd_squid(&Rationals, &s).unwrap(), Format::Dot));
        let json = emit(&a, Format::Json);
        let parsed = QuiverJson::parse(&json).unwrap();
        assert_eq!(parsed.to_json(), json);
        let back = parsed.to_presentation(Rationals).unwrap();
        assert_eq!(back.quiver, a.quiver);
        assert_eq!(back.relations.len(), a.relations.len());
    }
}
