use clap::{Args, ValueEnum};
use qstirling::groups::Caps;
use qstirling::qpoly::LaurentPoly;
use qstirling::starred::bfmaj_enum_all_with;
use qstirling::stirling::{table, Family};
use serde::Serialize;

use crate::{usage, Format};

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum TableFamily {
    StirlingA,
    StirlingB,
    ChowGessel,
    StirlingR,
    StirlingD,
    EulerianA,
    EulerianB,
    EulerianR,
    Bfmaj,
}

#[derive(Args)]
pub struct TableArgs {
    family: TableFamily,
    /// Largest row.
    #[arg(long)]
    n: usize,
    /// Smallest row printed.
    #[arg(long, default_value_t = 0)]
    from: usize,
    /// Number of colors, for the `-r` families.
    #[arg(long)]
    r: Option<u32>,
    #[arg(long, value_enum, default_value_t)]
    format: Format,
}

#[derive(Serialize)]
struct Row {
    n: usize,
    k: usize,
    poly: String,
}

fn family_name(f: TableFamily) -> String {
    f.to_possible_value()
        .map(|v| v.get_name().to_string())
        .unwrap_or_default()
}

fn stirling_rows(family: Family, max_n: usize) -> Vec<Vec<LaurentPoly>> {
    let t = table(family, max_n);
    (0..=max_n)
        .map(|n| (0..=n).map(|k| t.get(n as i64, k as i64)).collect())
        .collect()
}

fn rows(args: &TableArgs) -> anyhow::Result<Vec<Vec<LaurentPoly>>> {
    use TableFamily::*;
    let takes_r = matches!(args.family, StirlingR | EulerianR);
    let r = match (args.r, takes_r) {
        (Some(0), _) => return Err(usage("--r must be at least 1")),
        (Some(_), false) => return Err(usage(format!("{} does not take --r", family_name(args.family)))),
        (None, true) => return Err(usage("this family needs --r")),
        (r, _) => r.unwrap_or(0),
    };
    if args.from > args.n {
        return Err(usage("--from exceeds --n"));
    }
    let caps = Caps::default();
    let enumerated = |f: &dyn Fn(usize) -> anyhow::Result<Vec<LaurentPoly>>| {
        (0..=args.n)
            .map(|n| if n < args.from { Ok(Vec::new()) } else { f(n) })
            .collect::<anyhow::Result<Vec<_>>>()
    };
    let out = match args.family {
        StirlingA => stirling_rows(Family::A, args.n),
        StirlingB => stirling_rows(Family::B, args.n),
        ChowGessel => stirling_rows(Family::Cg, args.n),
        StirlingR => stirling_rows(Family::R(r), args.n),
        StirlingD => stirling_rows(Family::D, args.n),
        EulerianA => enumerated(&|n| caps.eulerian_a(n).map_err(|e| usage(e.to_string())))?,
        EulerianB => enumerated(&|n| caps.eulerian_b(n).map_err(|e| usage(e.to_string())))?,
        EulerianR => enumerated(&|n| caps.eulerian_r(r, n).map_err(|e| usage(e.to_string())))?,
        Bfmaj => enumerated(&|n| bfmaj_enum_all_with(&caps, n).map_err(|e| usage(e.to_string())))?,
    };
    Ok(out)
}

pub fn run(args: &TableArgs) -> anyhow::Result<String> {
    let rows: Vec<Row> = rows(args)?
        .into_iter()
        .enumerate()
        .skip(args.from)
        .flat_map(|(n, row)| {
            row.into_iter().enumerate().map(move |(k, p)| Row {
                n,
                k,
                poly: p.to_string(),
            })
        })
        .collect();
    let mut out = String::new();
    match args.format {
        Format::Text => {
            for r in &rows {
                out.push_str(&format!("n={} k={}  {}\n", r.n, r.k, r.poly));
            }
        }
        Format::Csv => {
            out.push_str("n,k,poly\n");
            for r in &rows {
                out.push_str(&format!("{},{},{}\n", r.n, r.k, r.poly));
            }
        }
        Format::Json => {
            out = serde_json::to_string_pretty(&rows)?;
            out.push('\n');
        }
    }
    Ok(out)
}
