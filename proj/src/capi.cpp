extern "C" int qtx_placeholder(void);
extern "C" int qtx_placeholder(void) { return 0; }
