// placeholder, replaced by the batch CLI
int main() { return 0; }
