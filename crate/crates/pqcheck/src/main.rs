fn main() {
    eprintln!("pqcheck: command-line interface not wired up yet");
    std::process::exit(2);
}
