fn main() {
    sor::io::cli::run();
}
