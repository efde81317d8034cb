use clap::Args;
use qstirling::identities::{entries, entry, GridConfig, IdentityError, IdentityReport, Verifier};

use crate::{usage, Format};

#[derive(Args)]
pub struct VerifyArgs {
    /// Identity ids, or `all` for every non-control entry.
    ids: Vec<String>,
    /// Extra ids, comma separated.
    #[arg(long = "ids", value_delimiter = ',')]
    ids_list: Vec<String>,
    /// Largest n of every grid (clamped to each entry's cap).
    #[arg(long, visible_alias = "n")]
    max_n: Option<usize>,
    /// Color counts for the colored entries, comma separated.
    #[arg(long, value_delimiter = ',')]
    r: Option<Vec<u32>>,
    /// Truncation order of series identities.
    #[arg(long, default_value_t = 8)]
    order: usize,
    /// With `all`, also run the deliberately corrupted entries.
    #[arg(long)]
    include_controls: bool,
    #[arg(long, value_enum, default_value_t)]
    format: Format,
}

fn to_cli_error(e: IdentityError) -> anyhow::Error {
    usage(e.to_string())
}

fn witness_text(r: &IdentityReport) -> String {
    let Some(w) = &r.witness else { return String::new() };
    let at = match w.t_degree {
        Some(d) => format!("t^{d} q^{}", w.q_exponent),
        None => format!("q^{}", w.q_exponent),
    };
    format!("{at}: lhs {} rhs {}", w.lhs_coeff, w.rhs_coeff)
}

fn render(reports: &[IdentityReport], format: Format) -> anyhow::Result<String> {
    let mut out = String::new();
    match format {
        Format::Text => {
            for r in reports {
                let status = if r.equal { "PASS" } else { "FAIL" };
                out.push_str(&format!("{status} {} {}", r.id, r.params));
                if !r.equal {
                    out.push_str(&format!("  [{}]", witness_text(r)));
                }
                out.push('\n');
            }
            let failed = reports.iter().filter(|r| !r.equal).count();
            out.push_str(&format!("{} checks, {} failed\n", reports.len(), failed));
        }
        Format::Csv => {
            out.push_str("id,params,equal,witness,lhs,rhs\n");
            for r in reports {
                out.push_str(&format!(
                    "{},{},{},{},{},{}\n",
                    r.id,
                    r.params,
                    r.equal,
                    witness_text(r),
                    r.lhs,
                    r.rhs
                ));
            }
        }
        Format::Json => {
            out = serde_json::to_string_pretty(reports)?;
            out.push('\n');
        }
    }
    Ok(out)
}

/// Returns the rendered reports and whether every check passed.
pub fn run(args: &VerifyArgs) -> anyhow::Result<(String, bool)> {
    let mut ids: Vec<&str> = args.ids.iter().chain(&args.ids_list).map(String::as_str).collect();
    if ids.is_empty() {
        return Err(usage("no identities selected; pass ids or `all`"));
    }
    if let Some(bad) = ids.iter().find(|id| **id != "all" && entry(id).is_none()) {
        return Err(usage(format!("unknown identity `{bad}` (see `qstirling list`)")));
    }
    if args.order == 0 {
        return Err(usage("--order must be positive"));
    }
    if args.r.as_ref().is_some_and(|rs| rs.is_empty() || rs.contains(&0)) {
        return Err(usage("--r takes positive color counts"));
    }
    let config = GridConfig {
        max_n: args.max_n,
        r_set: args.r.clone(),
        order: args.order,
        include_controls: args.include_controls,
    };
    if ids.contains(&"all") {
        let mut expanded: Vec<&str> = entries()
            .iter()
            .filter(|e| config.include_controls || !e.control)
            .map(|e| e.id)
            .collect();
        for id in ids {
            if id != "all" && !expanded.contains(&id) {
                expanded.push(id);
            }
        }
        ids = expanded;
    }
    let reports = Verifier::default().run(&ids, &config).map_err(to_cli_error)?;
    let ok = reports.iter().all(|r| r.equal);
    Ok((render(&reports, args.format)?, ok))
}
