import { defineConfig } from "vitest/config";

export default defineConfig({
  test: {
    environment: "jsdom",
    include: ["tests/**/*.test.ts"],
    hookTimeout: 180_000,
    testTimeout: 60_000,
  },
});
