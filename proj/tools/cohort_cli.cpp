// Placeholder entry point; replaced once the harness lands.
int main() { return 0; }
