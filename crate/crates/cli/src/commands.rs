use std::fmt::Write as _;
use std::fs;
use std::path::Path;

use realruled::bundle::BundleClass;
use realruled::checks::{paper_suite, Check};
use realruled::classify::{self, normalize, rational_classes, same_deformation_class, Quintuple, SurfaceRecipe};
use realruled::curve::CurveType;
use realruled::surface::{classify_real_structures_with, ClassStatus, ConjugationWitness};
use realruled::symbolic::fixture::IdentityFile;
use serde::de::DeserializeOwned;
use serde_json::{json, Value};

use crate::report::{Outcome, Report};

pub type CmdResult = Result<Outcome, String>;

fn to_value<T: serde::Serialize>(v: &T) -> Value {
    serde_json::to_value(v).expect("library types serialize")
}

fn read_json<T: DeserializeOwned>(path: &Path) -> Result<T, String> {
    let text = fs::read_to_string(path).map_err(|e| format!("{}: {e}", path.display()))?;
    serde_json::from_str(&text).map_err(|e| format!("{}: {e}", path.display()))
}

fn curve(g: i64, mu: i64, eps: i64) -> Result<CurveType, String> {
    CurveType::new(g, mu, eps).map_err(|e| e.to_string())
}

fn quintuple_inputs(q: &Quintuple) -> Value {
    json!({ "t": q.t, "k": q.k, "g": q.g, "mu": q.mu, "eps": q.eps })
}

pub fn check_type(t: i64, k: i64, g: i64, mu: i64, eps: i64) -> CmdResult {
    let q = Quintuple::new(t, k, g, mu, eps);
    let reason = q.violation();
    let result = match reason {
        None => json!({ "allowable": true }),
        Some(r) => json!({ "allowable": false, "reason": r }),
    };
    let human = match reason {
        None => format!("{q} is allowable\n"),
        Some(r) => format!("{q} is not allowable: {r}\n"),
    };
    Ok(Outcome {
        report: Report::new("check-type", quintuple_inputs(&q), result, vec![], human),
        ok: reason.is_none(),
    })
}

pub fn enumerate(g: i64, mu: i64, eps: i64, rational: bool) -> CmdResult {
    let ct = curve(g, mu, eps)?;
    let inputs = json!({ "g": g, "mu": mu, "eps": eps, "rational": rational });
    if rational {
        if g != 0 {
            return Err(format!("--rational needs g = 0, got g = {g}"));
        }
        let table = rational_classes();
        let mut human = format!("{} classes of real rational ruled surfaces\n", table.len());
        for c in &table {
            let _ = write!(human, "  real part {:?}", c.real_part);
            if !c.fibered {
                human.push_str(", fibered over no real structure of the base");
            }
            if let Some(spin) = c.quotient_spin {
                human.push_str(if spin { ", spin quotient" } else { ", non-spin quotient" });
            }
            human.push('\n');
        }
        let result = json!({ "count": table.len(), "classes": to_value(&table) });
        return Ok(Outcome {
            report: Report::new("enumerate", inputs, result, vec![], human),
            ok: true,
        });
    }
    let classes = classify::enumerate_classes(&ct).map_err(|e| {
        if g == 0 {
            format!("{e}; use --rational for g = 0")
        } else {
            e.to_string()
        }
    })?;
    let mut human = format!("{} classes over {ct}\n", classes.len());
    for c in &classes {
        let _ = writeln!(human, "  {c}");
    }
    let result = json!({ "count": classes.len(), "classes": to_value(&classes) });
    Ok(Outcome {
        report: Report::new("enumerate", inputs, result, vec![], human),
        ok: true,
    })
}

pub fn realize(t: i64, k: i64, g: i64, mu: i64, eps: i64, spin: Option<bool>) -> CmdResult {
    let q = Quintuple::new(t, k, g, mu, eps);
    let recipe = classify::realize(&q, spin).map_err(|e| e.to_string())?;
    let mut inputs = quintuple_inputs(&q);
    if let Some(s) = spin {
        inputs["spin"] = json!(s);
    }
    let value = to_value(&recipe);
    let human = format!(
        "{}\n",
        serde_json::to_string_pretty(&value).expect("values serialize")
    );
    Ok(Outcome {
        report: Report::new("realize", inputs, value, vec![], human),
        ok: true,
    })
}

pub fn equiv(a: &Path, b: &Path) -> CmdResult {
    let ra: SurfaceRecipe = read_json(a)?;
    let rb: SurfaceRecipe = read_json(b)?;
    let na = normalize(&ra).map_err(|e| e.to_string())?;
    let nb = normalize(&rb).map_err(|e| e.to_string())?;
    let same = same_deformation_class(&ra, &rb).map_err(|e| e.to_string())?;
    let human = format!(
        "a: {na}\nb: {nb}\n{}\n",
        if same { "equivalent" } else { "not equivalent" }
    );
    let inputs = json!({ "a": a.display().to_string(), "b": b.display().to_string() });
    let result = json!({ "a": to_value(&na), "b": to_value(&nb), "equivalent": same });
    Ok(Outcome {
        report: Report::new("equiv", inputs, result, vec![], human),
        ok: same,
    })
}

pub fn classify_structures(bundle: &Path, g: i64, mu: i64, eps: i64, witness: Option<&Path>) -> CmdResult {
    let ct = curve(g, mu, eps)?;
    let b: BundleClass = read_json(bundle)?;
    let w: Option<ConjugationWitness> = witness.map(read_json).transpose()?;
    let table = classify_real_structures_with(&b, &ct, w.as_ref()).map_err(|e| e.to_string())?;
    let mut human = if table.is_empty() {
        format!("no real structure on P(L + L0) lifts the real structure of {ct}\n")
    } else {
        format!("{} conjugacy classes over {ct}\n", table.classes.len())
    };
    for c in &table.classes {
        let tags: Vec<String> = c.class.iter().map(ToString::to_string).collect();
        let status = match c.status {
            ClassStatus::Proved => "",
            ClassStatus::Unknown => " (undecided whether this splits)",
        };
        let _ = writeln!(human, "  {{{}}}{status}", tags.join(", "));
    }
    let inputs = json!({
        "bundle": to_value(&b),
        "curve": to_value(&ct),
        "witness": w.as_ref().map(to_value),
    });
    Ok(Outcome {
        report: Report::new("classify-structures", inputs, to_value(&table), vec![], human),
        ok: !table.is_empty(),
    })
}

pub fn verify_paper(identity: Option<&str>, flip: bool) -> CmdResult {
    let checks: Vec<Check> = match identity {
        None => paper_suite(),
        Some(name) => {
            let file = IdentityFile::bundled().map_err(|e| e.to_string())?;
            vec![file.check(name, flip).map_err(|e| e.to_string())?]
        }
    };
    let passed = checks.iter().filter(|c| c.passed).count();
    let mut human = String::new();
    for c in &checks {
        let _ = writeln!(human, "{} {}: {}", if c.passed { "PASS" } else { "FAIL" }, c.name, c.detail);
    }
    let _ = writeln!(human, "{passed}/{} checks passed", checks.len());
    let inputs = json!({ "identity": identity, "flip_sign": flip });
    let result = json!({ "passed": passed, "total": checks.len() });
    let ok = passed == checks.len();
    Ok(Outcome {
        report: Report::new("verify-paper", inputs, result, checks, human),
        ok,
    })
}
