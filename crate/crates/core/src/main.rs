fn main() {
    let mut out = std::io::stdout().lock();
    let mut err = std::io::stderr().lock();
    let code = distfourier::cli::run_cli(std::env::args().skip(1), &mut out, &mut err);
    std::process::exit(code);
}
