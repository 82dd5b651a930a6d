use std::fs;
use std::io::{self, Write};
use std::path::{Path, PathBuf};

use serde::Serialize;
use wreath_algebra::linalg::ExactMatrix;
use wreath_algebra::terwilliger::TerwilligerAlgebra;
use wreath_algebra::wreath::{
    block_form, build as build_scheme, f_idempotents, g_basis, recognize as recognize_scheme,
    structure_report_with, Check, CheckName, Recognition, ReportOptions, WreathParams,
    TRIPLE_REGULARITY_LIMIT,
};

use crate::error::CliError;
use crate::format::{encode, SchemeDocument};
use crate::report::{BlockLayout, CheckEntry, DumpDocument, LabeledMatrix, ReportDocument};
use crate::{DumpWhat, OUT_DIR_ENV};

const MAX_ORDER: usize = 512;

fn slug(params: &WreathParams) -> String {
    params.to_string().replace(',', "-")
}

/// The explicit path, else `name` inside `$WREATH_OUT_DIR`, else `None`.
fn destination(out: Option<PathBuf>, name: String) -> Option<PathBuf> {
    out.or_else(|| std::env::var_os(OUT_DIR_ENV).map(|dir| PathBuf::from(dir).join(name)))
}

fn write_json<T: Serialize>(value: &T, path: &Path) -> Result<(), CliError> {
    let mut text = serde_json::to_string_pretty(value)?;
    text.push('\n');
    if let Some(parent) = path.parent().filter(|p| !p.as_os_str().is_empty()) {
        fs::create_dir_all(parent).map_err(|source| CliError::Io { path: parent.to_path_buf(), source })?;
    }
    fs::write(path, text).map_err(|source| CliError::Io { path: path.to_path_buf(), source })
}

fn emit<T: Serialize>(value: &T, path: Option<PathBuf>) -> Result<(), CliError> {
    match path {
        Some(p) => {
            write_json(value, &p)?;
            eprintln!("wrote {}", p.display());
            Ok(())
        }
        None => {
            let text = serde_json::to_string_pretty(value)?;
            match writeln!(io::stdout().lock(), "{text}") {
                Err(e) if e.kind() != io::ErrorKind::BrokenPipe => {
                    Err(CliError::Io { path: PathBuf::from("<stdout>"), source: e })
                }
                _ => Ok(()),
            }
        }
    }
}

fn check_size(params: &WreathParams, base: usize, force: bool) -> Result<(), CliError> {
    let v = params.order();
    if base >= v {
        return Err(CliError::Usage(format!("base point {base} is out of range 0..{v}")));
    }
    if v > MAX_ORDER && !force {
        return Err(CliError::Usage(format!("order {v} exceeds {MAX_ORDER}; pass --force to run anyway")));
    }
    Ok(())
}

fn entries(checks: &[Check]) -> Vec<CheckEntry> {
    checks
        .iter()
        .map(|c| CheckEntry { name: c.name.to_string(), passed: c.passed, witness: c.witness.clone() })
        .collect()
}

pub fn build(params: &WreathParams, out: Option<PathBuf>) -> Result<u8, CliError> {
    let doc = SchemeDocument::from_scheme(&build_scheme(params));
    emit(&doc, destination(out, format!("scheme-{}.json", slug(params))))?;
    Ok(0)
}

pub fn verify(
    params: &WreathParams,
    base: usize,
    out: Option<PathBuf>,
    force: bool,
    no_timings: bool,
) -> Result<u8, CliError> {
    check_size(params, base, force)?;
    let v = params.order();
    let options = ReportOptions { triple_regularity: Some(v <= TRIPLE_REGULARITY_LIMIT || force) };
    let (report, timings) =
        structure_report_with(params, base, options).map_err(|e| CliError::Input(e.to_string()))?;

    let dims = report.dims;
    let name: Vec<String> = params.factors().iter().map(|n| format!("K_{n}")).collect();
    println!("{} at x = {base} (v = {v}, d = {})", name.join(" wr "), params.classes());
    println!("dim T(x) = {}, dim U = {}, nonzero F = {}, dim Z(T(x)) = {}", dims.t, dims.u, dims.f_nonzero, dims.center);
    for c in &report.checks {
        match &c.witness {
            None => println!("  ok    {}", c.name),
            Some(w) => println!("  FAIL  {}: {w}", c.name),
        }
    }
    if !report.checks.iter().any(|c| c.name == CheckName::TripleRegularity) {
        println!("  skip  {} (v > {TRIPLE_REGULARITY_LIMIT}; pass --force)", CheckName::TripleRegularity);
    }
    let passed = report.checks.iter().filter(|c| c.passed).count();
    println!("{passed}/{} checks passed", report.checks.len());

    let doc = ReportDocument::new(&report, (!no_timings).then_some(&timings));
    if let Some(path) = destination(out, format!("report-{}-x{base}.json", slug(params))) {
        write_json(&doc, &path)?;
        println!("report written to {}", path.display());
    }
    Ok(if doc.all_passed() { 0 } else { 1 })
}

pub fn recognize(input: &Path) -> Result<u8, CliError> {
    let text = fs::read_to_string(input).map_err(|source| CliError::Io { path: input.to_path_buf(), source })?;
    let doc: SchemeDocument = serde_json::from_str(&text)
        .map_err(|e| CliError::Input(format!("{}: {e}", input.display())))?;
    let scheme = doc.to_scheme()?;
    match recognize_scheme(&scheme) {
        Recognition::Wreath { params, class_order } => {
            println!("{params}");
            if class_order.windows(2).any(|w| w[0] > w[1]) {
                eprintln!("class order: {class_order:?}");
            }
            Ok(0)
        }
        Recognition::NotWreath { witness } => {
            match witness {
                Some((i, j)) => println!("not-wreath: A_{i} A_{j} != k_{i} A_{j}"),
                None => println!("not-wreath"),
            }
            Ok(1)
        }
    }
}

fn labeled(label: String, indices: Vec<usize>, m: &ExactMatrix) -> LabeledMatrix {
    LabeledMatrix { label, indices, matrix: encode(m) }
}

pub fn dump(
    params: &WreathParams,
    base: usize,
    what: DumpWhat,
    out: Option<PathBuf>,
    force: bool,
) -> Result<u8, CliError> {
    check_size(params, base, force)?;
    let t = TerwilligerAlgebra::new(&build_scheme(params), base).map_err(|e| CliError::Input(e.to_string()))?;
    let n = params.classes() + 1;
    let mut doc = DumpDocument {
        what: String::new(),
        params: params.factors().to_vec(),
        base_point: base,
        matrices: Vec::new(),
        block_form: None,
    };
    let mut code = 0;
    match what {
        DumpWhat::TripleProducts => {
            doc.what = "triple-products".into();
            for i in 0..n {
                for j in 0..n {
                    for h in 0..n {
                        let m = t.triple_product(i, j, h).expect("indices in range");
                        if !m.is_zero() {
                            doc.matrices.push(labeled(format!("E_{i}* A_{j} E_{h}*"), vec![i, j, h], &m));
                        }
                    }
                }
            }
        }
        DumpWhat::GBasis => {
            doc.what = "g-basis".into();
            let pb = g_basis(&t);
            for (i, row) in pb.g.iter().enumerate() {
                for (j, m) in row.iter().enumerate() {
                    doc.matrices.push(labeled(format!("G_{i}{j}"), vec![i, j], m));
                }
            }
        }
        DumpWhat::FIdempotents => {
            doc.what = "f-idempotents".into();
            for (&(i, h), m) in f_idempotents(&t).nonzero() {
                doc.matrices.push(labeled(format!("F_{i}{h}"), vec![i, h], m));
            }
        }
        DumpWhat::BlockForm => {
            doc.what = "block-form".into();
            let form = block_form(&t);
            for j in 0..n {
                doc.matrices.push(labeled(format!("A_{j} reordered"), vec![j], &form.reorder(t.a(j))));
            }
            if form.checks.iter().any(|c| !c.passed) {
                code = 1;
            }
            doc.block_form = Some(BlockLayout {
                checks: entries(&form.checks),
                order: form.order,
                sizes: form.sizes,
                offsets: form.offsets,
            });
        }
    }
    let name = format!("{}-{}-x{base}.json", doc.what, slug(params));
    emit(&doc, destination(out, name))?;
    Ok(code)
}
