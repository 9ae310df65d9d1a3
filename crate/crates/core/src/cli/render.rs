use num_bigint::BigInt;
use serde::Serialize;

use super::{guard_order, guard_strata, usage, Failure, OutputFormat};
use crate::algebra::{latex, latex_series, plain, plain_series, BiSeries, IntPoly};
use crate::arith::PrimePower;
use crate::error::ensure_n_at_least;
use crate::report::{decimal, VerificationReport};
use crate::{getzler, keel, strata, zeta};

use OutputFormat::*;

fn unsupported(cmd: &str, fmt: OutputFormat) -> Failure {
    usage(format!("`{cmd}` does not support --format {}", fmt.name()))
}

fn json<T: Serialize>(v: &T) -> String {
    let mut s = serde_json::to_string(v).expect("serializable");
    s.push('\n');
    s
}

fn csv_table(header: &[&str], rows: impl IntoIterator<Item = Vec<String>>) -> String {
    let mut w = csv::Writer::from_writer(Vec::new());
    w.write_record(header).expect("in-memory write");
    for row in rows {
        w.write_record(&row).expect("in-memory write");
    }
    String::from_utf8(w.into_inner().expect("flush")).expect("utf-8")
}

fn decimals(p: &IntPoly) -> Vec<String> {
    p.coeffs().iter().map(|c| c.to_string()).collect()
}

pub(crate) fn poincare(n: usize, fmt: OutputFormat) -> Result<String, Failure> {
    let p = keel::poincare_poly(n)?;
    #[derive(Serialize)]
    struct Out {
        n: usize,
        coeffs: Vec<String>,
    }
    match fmt {
        Plain => Ok(format!("{}\n", plain(&p, "t", 2))),
        Latex => Ok(format!("{}\n", latex(&p, "t", 2))),
        Json => Ok(json(&Out { n, coeffs: decimals(&p) })),
        Csv => Err(unsupported("poincare", fmt)),
    }
}

pub(crate) fn betti(n: usize, k: Option<i64>, fmt: OutputFormat) -> Result<String, Failure> {
    let p = keel::poincare_poly(n)?;
    let rows: Vec<(i64, BigInt)> = match k {
        Some(k) => vec![(k, keel::betti(n, k)?)],
        None => (0..p.coeffs().len() as i64).map(|k| (k, p.coeff(k as usize))).collect(),
    };
    #[derive(Serialize)]
    struct Row {
        n: usize,
        k: i64,
        #[serde(serialize_with = "decimal")]
        betti: BigInt,
    }
    match fmt {
        Plain => Ok(rows.iter().map(|(k, b)| format!("a_{k}({n}) = {b}\n")).collect()),
        Json => {
            let rows: Vec<Row> = rows.into_iter().map(|(k, betti)| Row { n, k, betti }).collect();
            Ok(json(&rows))
        }
        Csv => Ok(csv_table(
            &["n", "k", "betti"],
            rows.iter().map(|(k, b)| vec![n.to_string(), k.to_string(), b.to_string()]),
        )),
        Latex => Err(unsupported("betti", fmt)),
    }
}

pub(crate) fn count(n: usize, q: u64, fmt: OutputFormat) -> Result<String, Failure> {
    let c = keel::point_count(n, q)?;
    #[derive(Serialize)]
    struct Out {
        n: usize,
        q: u64,
        #[serde(serialize_with = "decimal")]
        count: BigInt,
    }
    match fmt {
        Plain => Ok(format!("{c}\n")),
        Json => Ok(json(&Out { n, q, count: c })),
        Csv | Latex => Err(unsupported("count", fmt)),
    }
}

pub(crate) fn strata(n: usize, q: Option<u64>, fmt: OutputFormat) -> Result<String, Failure> {
    ensure_n_at_least(n, 3)?;
    guard_strata(n)?;
    let q = q.map(PrimePower::new).transpose()?;
    let table = strata::strata(n)?;
    let qb = q.map(PrimePower::as_bigint);

    #[derive(Serialize)]
    struct Row {
        tree: String,
        vertices: usize,
        edges: usize,
        count_poly: Vec<String>,
        #[serde(skip_serializing_if = "Option::is_none")]
        count: Option<String>,
    }
    #[derive(Serialize)]
    struct Total {
        strata: usize,
        count_poly: Vec<String>,
        #[serde(skip_serializing_if = "Option::is_none")]
        count: Option<String>,
    }
    #[derive(Serialize)]
    struct Out {
        n: usize,
        #[serde(skip_serializing_if = "Option::is_none")]
        q: Option<u64>,
        strata: Vec<Row>,
        total: Total,
    }

    let total_poly = table.total_poly();
    let total_count = qb.as_ref().map(|q| total_poly.eval(q).to_string());
    let at = |p: &IntPoly| qb.as_ref().map(|q| p.eval(q).to_string());

    match fmt {
        Json => Ok(json(&Out {
            n,
            q: q.map(PrimePower::get),
            strata: table
                .strata()
                .iter()
                .map(|s| Row {
                    tree: s.tree.serialization(),
                    vertices: s.tree.vertex_count(),
                    edges: s.edge_count,
                    count_poly: decimals(&s.count_poly),
                    count: at(&s.count_poly),
                })
                .collect(),
            total: Total {
                strata: table.len(),
                count_poly: decimals(&total_poly),
                count: total_count,
            },
        })),
        Plain | Csv => {
            let mut header = vec!["tree", "vertices", "edges", "count_poly"];
            if q.is_some() {
                header.push("count");
            }
            let mut rows: Vec<Vec<String>> = table
                .strata()
                .iter()
                .map(|s| {
                    let mut row = vec![
                        s.tree.serialization(),
                        s.tree.vertex_count().to_string(),
                        s.edge_count.to_string(),
                        plain(&s.count_poly, "q", 1),
                    ];
                    row.extend(at(&s.count_poly));
                    row
                })
                .collect();
            let mut total = vec![
                "total".to_string(),
                String::new(),
                String::new(),
                plain(&total_poly, "q", 1),
            ];
            total.extend(total_count);
            rows.push(total);
            if fmt == Csv {
                Ok(csv_table(&header, rows))
            } else {
                Ok(aligned(&header, &rows))
            }
        }
        Latex => {
            let cols = if q.is_some() { "lrrll" } else { "lrrl" };
            let mut out = format!("\\begin{{tabular}}{{{cols}}}\n");
            let mut line = |cells: Vec<String>| {
                out.push_str(&cells.join(" & "));
                out.push_str(" \\\\\n");
            };
            let mut head = vec!["tree".into(), "$|V|$".into(), "$k$".into(), "count".into()];
            if let Some(q) = q {
                head.push(format!("$q={q}$"));
            }
            line(head);
            for s in table.strata() {
                let mut cells = vec![
                    format!("\\texttt{{{}}}", s.tree.serialization()),
                    s.tree.vertex_count().to_string(),
                    s.edge_count.to_string(),
                    format!("${}$", latex(&s.count_poly, "q", 1)),
                ];
                cells.extend(at(&s.count_poly));
                line(cells);
            }
            let mut cells =
                vec!["total".into(), String::new(), String::new(), format!("${}$", latex(&total_poly, "q", 1))];
            cells.extend(total_count);
            line(cells);
            out.push_str("\\end{tabular}\n");
            Ok(out)
        }
    }
}

fn aligned(header: &[&str], rows: &[Vec<String>]) -> String {
    let mut widths: Vec<usize> = header.iter().map(|h| h.len()).collect();
    for row in rows {
        for (w, cell) in widths.iter_mut().zip(row) {
            *w = (*w).max(cell.chars().count());
        }
    }
    let mut out = String::new();
    let mut line = |cells: Vec<&str>| {
        let text: Vec<String> =
            cells.iter().zip(&widths).map(|(c, &w)| format!("{c:<w$}")).collect();
        out.push_str(text.join("  ").trim_end());
        out.push('\n');
    };
    line(header.to_vec());
    for row in rows {
        line(row.iter().map(String::as_str).collect());
    }
    out
}

pub(crate) fn zeta(n: usize, p: u64, order: usize, fmt: OutputFormat) -> Result<String, Failure> {
    guard_order(order)?;
    let z = zeta::zeta_moduli(n, p)?;
    let counts: Vec<String> = if order == 0 {
        Vec::new()
    } else {
        zeta::log_derivative_series(&z, order)?.coeffs()[1..].iter().map(|c| c.to_string()).collect()
    };
    #[derive(Serialize)]
    struct Out<'a> {
        n: usize,
        zeta: &'a zeta::FactoredZeta,
        log_derivative: &'a [String],
    }
    let series_text = |latex: bool| -> String {
        let terms: Vec<String> = counts
            .iter()
            .enumerate()
            .map(|(i, c)| match (i + 1, latex) {
                (1, _) => format!("{c}T"),
                (r, false) => format!("{c}T^{r}"),
                (r, true) => format!("{c}T^{{{r}}}"),
            })
            .collect();
        terms.join(" + ")
    };
    match fmt {
        Plain => {
            let mut out = format!("Z(T) = {z}\n");
            if !counts.is_empty() {
                out.push_str(&format!("T d/dT log Z(T) = {} + O(T^{})\n", series_text(false), order + 1));
            }
            Ok(out)
        }
        Latex => {
            let mut out = format!("Z(T) = {}\n", z.latex());
            if !counts.is_empty() {
                out.push_str(&format!(
                    "T \\frac{{d}}{{dT}} \\log Z(T) = {} + O(T^{{{}}})\n",
                    series_text(true),
                    order + 1
                ));
            }
            Ok(out)
        }
        Json => Ok(json(&Out { n, zeta: &z, log_derivative: &counts })),
        Csv => Err(unsupported("zeta", fmt)),
    }
}

pub(crate) fn getzler(order: usize, fmt: OutputFormat) -> Result<String, Failure> {
    guard_order(order)?;
    let f = getzler::series_f(order + 1)?;
    let g = getzler::series_g(order + 1)?;
    #[derive(Serialize)]
    struct Out<'a> {
        order: usize,
        f: &'a BiSeries,
        g: &'a BiSeries,
    }
    let tail = |latex: bool| {
        if latex {
            format!(" + O(x^{{{}}})", order + 1)
        } else {
            format!(" + O(x^{})", order + 1)
        }
    };
    match fmt {
        Plain => Ok(format!(
            "f = {}{}\ng = {}{}\n",
            plain_series(f.coeffs(), "x", "s"),
            tail(false),
            plain_series(g.coeffs(), "x", "s"),
            tail(false)
        )),
        Latex => Ok(format!(
            "f = {}{}\ng = {}{}\n",
            latex_series(f.coeffs(), "x", "s"),
            tail(true),
            latex_series(g.coeffs(), "x", "s"),
            tail(true)
        )),
        Json => Ok(json(&Out { order: order + 1, f: &f, g: &g })),
        Csv => Err(unsupported("getzler", fmt)),
    }
}

pub(crate) fn reports(reports: &[VerificationReport], fmt: OutputFormat) -> Result<String, Failure> {
    match fmt {
        Plain => {
            let mut out: String = reports.iter().map(|r| format!("{r}\n")).collect();
            let passed = reports.iter().filter(|r| r.pass).count();
            out.push_str(&format!("{passed}/{} identities hold\n", reports.len()));
            Ok(out)
        }
        Json => Ok(json(&reports)),
        Csv => Ok(csv_table(
            &["identity", "parameters", "lhs", "rhs", "pass"],
            reports.iter().map(|r| {
                let params: Vec<String> =
                    r.parameters.iter().map(|(k, v)| format!("{k}={v}")).collect();
                vec![
                    r.identity.clone(),
                    params.join(";"),
                    r.lhs.clone(),
                    r.rhs.clone(),
                    r.pass.to_string(),
                ]
            }),
        )),
        Latex => Err(unsupported("verify", fmt)),
    }
}
