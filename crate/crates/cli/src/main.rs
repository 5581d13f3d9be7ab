fn main() {
    let argv: Vec<String> = std::env::args().collect();
    std::process::exit(spanner_cli::run(&argv));
}
