//! The check registry behind `ncchains verify`, driven from code.
//!
//!     cargo run --release --example verify -- [ARGS...]

fn main() {
    let mut args: Vec<String> = vec!["ncchains".into(), "verify".into()];
    let extra: Vec<String> = std::env::args().skip(1).collect();
    if extra.is_empty() {
        args.extend(["--all", "--max-rank", "3"].map(String::from));
    } else {
        args.extend(extra);
    }
    let code = ncchains::cli::run(args, &mut std::io::stdout(), &mut std::io::stderr());
    std::process::exit(code);
}
