use std::io::Write;
use std::path::PathBuf;

fn main() {
    let defaults = std::env::var_os(blockalg::cli::DEFAULTS_ENV).map(PathBuf::from);
    let out = blockalg::cli::run(std::env::args_os(), defaults.as_deref());
    let _ = std::io::stdout().write_all(out.stdout.as_bytes());
    let _ = std::io::stderr().write_all(out.stderr.as_bytes());
    std::process::exit(out.code);
}
