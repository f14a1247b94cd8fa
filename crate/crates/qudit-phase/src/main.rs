fn main() {
    let args: Vec<String> = std::env::args().collect();
    let mut out = std::io::stdout().lock();
    let mut err = std::io::stderr().lock();
    let code = qudit_phase::cli::run(&args, &mut out, &mut err);
    std::process::exit(code);
}
