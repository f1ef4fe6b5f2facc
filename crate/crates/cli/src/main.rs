fn main() -> std::process::ExitCode {
    lande_cli::run()
}
