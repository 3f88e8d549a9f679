/** Browser entry point: attach the app to the served engine. */

import { App } from "./app.js";
import { HttpTransport } from "./protocol.js";

const app = new App(new HttpTransport("/command"), window);
if (document.readyState === "loading") {
  document.addEventListener("DOMContentLoaded", () => void app.boot());
} else {
  void app.boot();
}
