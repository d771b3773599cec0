fn main() {
    let outcome = qschubert::cli::dispatch(std::env::args_os());
    if outcome.code == 0 {
        print!("{}", outcome.output);
    } else {
        eprint!("{}", outcome.output);
    }
    std::process::exit(outcome.code);
}
