// placeholder; the CLI is implemented after the core passes its unit tests
int main() { return 0; }
