//! Drive the command-line surface in-process and read the JSON report.
//! `cargo run --example cli_report -- info --beta 4`

use serde_json::Value;

fn main() {
    let mut args: Vec<String> = std::env::args().collect();
    if args.len() == 1 {
        args.extend(["aut", "--beta", "4", "--order"].map(String::from));
    }
    let out = macdonald::cli::run(args);
    eprint!("{}", out.stderr);
    if let Ok(report) = serde_json::from_str::<Value>(&out.stdout) {
        println!("command {} for beta = {}", report["command"], report["beta"]);
        println!("{}", serde_json::to_string_pretty(&report["results"]).unwrap());
        for v in report["verdicts"].as_array().into_iter().flatten() {
            println!("{} {}", if v["pass"] == true { "ok  " } else { "FAIL" }, v["locus"]);
        }
    } else {
        print!("{}", out.stdout);
    }
    std::process::exit(out.code);
}
