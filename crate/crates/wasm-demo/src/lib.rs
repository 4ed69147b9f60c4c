//! JSON bindings for the browser demo. Every exported function takes plain
//! numbers and strings and returns a JSON string, so the same code path is
//! exercised by host tests and by the wasm module. Errors come back as
//! `Err(String)`, which wasm-bindgen surfaces as a thrown exception.
//!
//! Build the wasm package with
//! `wasm-pack build crates/wasm-demo --target web --out-dir ../../www/pkg`.

use serde::Serialize;
use wasm_bindgen::prelude::wasm_bindgen;

use kleene_tables::asymptotics::{self, Label};
use kleene_tables::logic::{enumerate_trees, Assignment};
use kleene_tables::recurrence::{
    sequences, subsequences_of, CaseSequences, SequenceTable, Sequences,
};

/// Whole truth tables are rendered in the DOM; past n = 5 the matrix
/// (42 bracketings by 243 assignments) stops being browsable.
pub const MAX_TRUTH_TABLE_N: usize = 5;
/// Enough terms to show every published value with room to scroll.
pub const MAX_SEQUENCE_N: usize = 200;
/// The convergence chart stays readable well before the capacity limit.
pub const MAX_CONVERGENCE_N: usize = 400;

#[derive(Serialize)]
struct FormulaRow {
    formula: String,
    /// One digit per assignment, in the same order as `assignments`.
    values: String,
    t: usize,
    f: usize,
    u: usize,
}

#[derive(Serialize)]
struct TruthTables {
    n: usize,
    assignments: Vec<String>,
    formulas: Vec<FormulaRow>,
    totals: Totals,
}

#[derive(Serialize)]
struct Totals {
    t: u64,
    f: u64,
    u: u64,
    g: u64,
}

/// The full truth table matrix for n variables: every bracketing of the
/// implication chain evaluated under every assignment.
#[wasm_bindgen]
pub fn truth_tables_json(n: u32) -> Result<String, String> {
    let n = n as usize;
    if n == 0 {
        return Err("n must be at least 1".into());
    }
    if n > MAX_TRUTH_TABLE_N {
        return Err(format!("n capped at {MAX_TRUTH_TABLE_N} for display"));
    }
    let assignments: Vec<Assignment> = Assignment::enumerate(n).collect();
    let trees = enumerate_trees(n).map_err(|e| e.to_string())?;
    let mut totals = Totals {
        t: 0,
        f: 0,
        u: 0,
        g: 0,
    };
    let formulas = trees
        .iter()
        .map(|tree| {
            let mut values = String::with_capacity(assignments.len());
            let mut counts = [0usize; 3];
            for assignment in &assignments {
                let value = tree.eval(assignment).map_err(|e| e.to_string())?;
                values.push(char::from(b'0' + value.digit()));
                counts[value.digit() as usize] += 1;
            }
            totals.f += counts[0] as u64;
            totals.t += counts[1] as u64;
            totals.u += counts[2] as u64;
            Ok(FormulaRow {
                formula: tree.render(),
                values,
                t: counts[1],
                f: counts[0],
                u: counts[2],
            })
        })
        .collect::<Result<Vec<_>, String>>()?;
    totals.g = totals.t + totals.f + totals.u;
    let table = TruthTables {
        n,
        assignments: assignments.iter().map(Assignment::digits).collect(),
        formulas,
        totals,
    };
    serde_json::to_string(&table).map_err(|e| e.to_string())
}

#[derive(Serialize)]
struct SequenceJson {
    name: String,
    values: Vec<TermJson>,
}

#[derive(Serialize)]
struct TermJson {
    n: usize,
    /// Decimal string; the terms outgrow JavaScript numbers near n = 17.
    value: String,
}

fn table_by_name<'a>(
    name: &str,
    seqs: &'a Sequences,
    cases: &'a CaseSequences,
) -> Result<&'a SequenceTable, String> {
    if name == "catalan" {
        return Ok(&seqs.catalan);
    }
    let label = Label::parse(name).ok_or(format!("unknown sequence {name}"))?;
    Ok(match label.case() {
        Some(case) => cases.get(case),
        None => match label {
            Label::G => &seqs.g,
            Label::T => &seqs.t,
            Label::F => &seqs.f,
            _ => &seqs.u,
        },
    })
}

/// The first `n` terms of a named sequence, values as decimal strings.
#[wasm_bindgen]
pub fn sequence_table_json(name: &str, n: u32) -> Result<String, String> {
    let n = n as usize;
    if n == 0 {
        return Err("n must be at least 1".into());
    }
    if n > MAX_SEQUENCE_N {
        return Err(format!("n capped at {MAX_SEQUENCE_N} for display"));
    }
    let seqs = sequences(n).map_err(|e| e.to_string())?;
    let cases = subsequences_of(&seqs).map_err(|e| e.to_string())?;
    let table = table_by_name(name, &seqs, &cases)?;
    let values = table
        .iter()
        .map(|(n, value)| TermJson {
            n,
            value: value.to_string(),
        })
        .collect();
    let out = SequenceJson {
        name: name.to_string(),
        values,
    };
    serde_json::to_string(&out).map_err(|e| e.to_string())
}

#[derive(Serialize)]
struct ConvergenceJson {
    label: String,
    exact_form: String,
    constant: f64,
    points: Vec<PointJson>,
}

#[derive(Serialize)]
struct PointJson {
    n: usize,
    ratio: f64,
    exact_log10: f64,
}

/// Exact-to-estimate ratios for one sequence at every n up to `max_n`,
/// against the growth law `c * 3 * 12^(n-1) / sqrt(pi n^3)`.
#[wasm_bindgen]
pub fn convergence_json(label: &str, max_n: u32) -> Result<String, String> {
    let max_n = max_n as usize;
    let label = Label::parse(label).ok_or(format!("unknown sequence {label}"))?;
    if max_n < label.min_n() {
        return Err(format!("{label} needs n of at least {}", label.min_n()));
    }
    if max_n > MAX_CONVERGENCE_N {
        return Err(format!("n capped at {MAX_CONVERGENCE_N} for the chart"));
    }
    let ns: Vec<usize> = (label.min_n()..=max_n).collect();
    let reports = asymptotics::convergence_report(label, &ns).map_err(|e| e.to_string())?;
    let constant = asymptotics::constant(label);
    let out = ConvergenceJson {
        label: label.name().to_string(),
        exact_form: constant.exact_form.to_string(),
        constant: constant.value,
        points: reports
            .iter()
            .map(|r| PointJson {
                n: r.n,
                ratio: r.ratio,
                exact_log10: r.exact_log10,
            })
            .collect(),
    };
    serde_json::to_string(&out).map_err(|e| e.to_string())
}

/// Labels the sequence picker offers, in display order.
#[wasm_bindgen]
pub fn sequence_names() -> String {
    let mut names: Vec<&str> = vec!["catalan"];
    names.extend(Label::ALL.iter().map(|l| l.name()));
    serde_json::to_string(&names).expect("static list serializes")
}

#[cfg(test)]
mod tests {
    use super::*;
    use serde_json::Value;

    fn parse(json: &str) -> Value {
        serde_json::from_str(json).expect("valid json")
    }

    #[test]
    fn truth_tables_for_two_variables() {
        let v = parse(&truth_tables_json(2).unwrap());
        assert_eq!(v["n"], 2);
        assert_eq!(v["assignments"].as_array().unwrap().len(), 9);
        assert_eq!(v["assignments"][0], "00");
        let formulas = v["formulas"].as_array().unwrap();
        assert_eq!(formulas.len(), 1);
        assert_eq!(formulas[0]["formula"], "(p1>p2)");
        let values = formulas[0]["values"].as_str().unwrap();
        assert_eq!(values.len(), 9);
        assert_eq!(values.matches('1').count(), 5);
        assert_eq!(v["totals"]["t"], 5);
        assert_eq!(v["totals"]["f"], 1);
        assert_eq!(v["totals"]["u"], 3);
        assert_eq!(v["totals"]["g"], 9);
    }

    #[test]
    fn truth_tables_for_three_variables_have_both_bracketings() {
        let v = parse(&truth_tables_json(3).unwrap());
        let formulas = v["formulas"].as_array().unwrap();
        let names: Vec<&str> = formulas
            .iter()
            .map(|f| f["formula"].as_str().unwrap())
            .collect();
        assert!(names.contains(&"((p1>p2)>p3)"));
        assert!(names.contains(&"(p1>(p2>p3))"));
        for f in formulas {
            assert_eq!(f["values"].as_str().unwrap().len(), 27);
        }
        assert_eq!(v["totals"]["t"], 30);
        assert_eq!(v["totals"]["f"], 6);
        assert_eq!(v["totals"]["u"], 18);
    }

    #[test]
    fn truth_tables_reject_out_of_range_n() {
        assert!(truth_tables_json(0).is_err());
        assert!(truth_tables_json(6).is_err());
    }

    #[test]
    fn sequence_table_reproduces_published_terms() {
        let v = parse(&sequence_table_json("t", 9).unwrap());
        let values = v["values"].as_array().unwrap();
        assert_eq!(values.len(), 9);
        assert_eq!(values[8]["n"], 9);
        assert_eq!(values[8]["value"], "16242474");

        let v = parse(&sequence_table_json("u3", 4).unwrap());
        let got: Vec<&str> = v["values"]
            .as_array()
            .unwrap()
            .iter()
            .map(|t| t["value"].as_str().unwrap())
            .collect();
        assert_eq!(got, ["0", "1", "6", "45"]);

        let v = parse(&sequence_table_json("catalan", 5).unwrap());
        let got: Vec<&str> = v["values"]
            .as_array()
            .unwrap()
            .iter()
            .map(|t| t["value"].as_str().unwrap())
            .collect();
        assert_eq!(got, ["1", "1", "2", "5", "14"]);
    }

    #[test]
    fn sequence_table_rejects_bad_input() {
        assert!(sequence_table_json("nonsense", 5).is_err());
        assert!(sequence_table_json("t", 0).is_err());
        assert!(sequence_table_json("t", 201).is_err());
    }

    #[test]
    fn convergence_points_approach_one_from_above() {
        let v = parse(&convergence_json("u", 60).unwrap());
        assert_eq!(v["label"], "u");
        assert_eq!(v["exact_form"], "1/3");
        let points = v["points"].as_array().unwrap();
        assert_eq!(points.len(), 60);
        assert_eq!(points[0]["n"], 1);
        let last = points[59]["ratio"].as_f64().unwrap();
        assert!(last > 1.0 && last < 1.1, "ratio at 60 was {last}");
        let mid = points[29]["ratio"].as_f64().unwrap();
        assert!(last < mid, "deviation should shrink as n grows");
    }

    #[test]
    fn convergence_respects_case_start_and_caps() {
        let v = parse(&convergence_json("t3", 50).unwrap());
        assert_eq!(v["points"][0]["n"], 2);
        assert!(convergence_json("nonsense", 50).is_err());
        assert!(convergence_json("t3", 1).is_err());
        assert!(convergence_json("t3", 401).is_err());
    }

    #[test]
    fn sequence_names_lists_every_picker_entry() {
        let v = parse(&sequence_names());
        let names = v.as_array().unwrap();
        assert_eq!(names.len(), 13);
        assert_eq!(names[0], "catalan");
        assert!(names.contains(&Value::from("u3")));
    }
}
