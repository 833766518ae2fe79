import { defineConfig } from "vitest/config";

export default defineConfig({
  test: {
    environment: "node",
    include: ["tests/**/*.test.ts"],
    // the fidelity suite boots the real python service
    testTimeout: 60_000,
    hookTimeout: 60_000,
  },
});
