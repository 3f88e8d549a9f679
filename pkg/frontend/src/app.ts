/**
 * Application shell: one engine session driven by commands, one view.
 *
 * The engine owns all math and the canonical configuration; this class
 * owns nothing but the latest frame, two heatmap caches (thumbnails and a
 * high-resolution detail sweep), hover state, and the poll loop that keeps
 * frames flowing while the engine is playing. Every control change becomes
 * a set_param/set_config command, and every frame echo is written back to
 * the URL fragment, so the address bar always holds the shareable state.
 */

import type { Command, EngineTransport, Frame } from "./protocol.js";
import { ControlValues, parseStateString } from "./statestring.js";
import {
  buildControls,
  buildPanelToggles,
  updateControls,
  updatePanelToggles,
} from "./controls.js";
import {
  GridCache,
  buildSkeleton,
  renderChart,
  renderDiagram,
  renderOutput,
} from "./render.js";
import { heatmapToRgba } from "./palette.js";
import { PANEL_IDS, Projection, ViewState, initialViewState, projectionUnit } from "./view.js";

export const THUMBNAIL_RESOLUTION = 10;
export const DETAIL_RESOLUTION = 100;
const POLL_MS = 200;
const DETAIL_EVERY_N_POLLS = 5;

interface DetailCache extends GridCache {
  epoch: number;
}

export class App {
  view: ViewState = initialViewState();
  lastFrame: Frame | null = null;
  thumbs: GridCache | null = null;
  detail: DetailCache | null = null;

  private doc: Document;
  private win: Window;
  private inFlightFrameRequest = false;
  private pollTimer: ReturnType<typeof setInterval> | null = null;
  private pollCount = 0;

  constructor(private transport: EngineTransport, win: Window) {
    this.win = win;
    this.doc = win.document;
  }

  /** Wire the static UI and adopt the page fragment as the configuration. */
  async boot(): Promise<void> {
    const root = this.doc.getElementById("app");
    if (root) buildSkeleton(root);
    buildControls(this.doc, { onParam: (key, value) => void this.setParam(key, value) });
    buildPanelToggles(this.doc, {
      onHiddenPanelsChange: (hidden) => void this.setHiddenPanels(hidden),
    });
    this.doc.getElementById("btn-play")?.addEventListener("click", () => {
      void this.command({ cmd: this.view.playing ? "pause" : "play" });
    });
    this.doc.getElementById("btn-step")?.addEventListener("click", () => {
      void this.step();
    });
    this.doc.getElementById("btn-reset")?.addEventListener("click", () => {
      void this.command({ cmd: "reset" }).then(() => this.refreshHeatmaps());
    });

    const fragment = this.win.location.hash || "#";
    await this.command({ cmd: "set_config", state: fragment });
    await this.refreshHeatmaps();
  }

  /** Send one command and fold its frame into the view. */
  async command(cmd: Command): Promise<Frame> {
    let frame: Frame;
    try {
      frame = await this.transport.send(cmd);
    } catch (err) {
      this.notice(`engine unreachable: ${String(err)}`);
      throw err;
    }
    if (frame.error) {
      this.notice(frame.error);
    } else if (cmd.cmd === "set_config" || cmd.cmd === "set_param" || cmd.cmd === "reset") {
      // passive refreshes leave an existing notice until the config changes
      this.notice(null);
    }
    this.applyFrame(frame);
    return frame;
  }

  async setParam(key: string, value: string): Promise<void> {
    await this.command({ cmd: "set_param", key, value });
    await this.refreshHeatmaps();
  }

  async step(): Promise<void> {
    await this.command({ cmd: "step" });
    await this.refreshHeatmaps();
  }

  /** Compose the ui= key: known panel ids plus any opaque foreign tokens. */
  async setHiddenPanels(hidden: string[]): Promise<void> {
    const current = this.lastFrame ? parseStateString(this.lastFrame.state).ui : [];
    const foreign = current.filter((token) => !(PANEL_IDS as readonly string[]).includes(token));
    await this.setParam("ui", [...hidden, ...foreign].join(","));
  }

  onHover(unit: string | null): void {
    if (this.view.hovered === unit) return;
    this.view.hovered = unit;
    this.renderAll();
    if (unit !== null && !this.hasDetailFor(unit)) void this.fetchDetail();
  }

  /** The grid the output panel shows right now, colorized. */
  currentProjection(): Projection | null {
    const unit = projectionUnit(this.view);
    const fromDetail = this.detail && this.lastFrame
      && this.detail.epoch === this.lastFrame.epoch
      && this.detail.grids[unit];
    const cache = fromDetail ? this.detail : this.thumbs;
    const values = cache?.grids[unit];
    if (!cache || !values) return null;
    return {
      unit,
      resolution: cache.resolution,
      rgba: heatmapToRgba(values, cache.resolution),
    };
  }

  applyFrame(frame: Frame): void {
    const previousState = this.lastFrame?.state;
    this.lastFrame = frame;
    if (previousState !== undefined && previousState !== frame.state) {
      // configuration changed; cached grids may describe a dead network
      this.thumbs = null;
      this.detail = null;
    }
    const unitIds = Object.keys(frame.heatmaps);
    if (unitIds.length > 0) {
      const first = frame.heatmaps[unitIds[0]];
      const resolution = Math.round(Math.sqrt(first.length));
      const cache = { resolution, grids: frame.heatmaps };
      if (resolution > THUMBNAIL_RESOLUTION) {
        this.detail = { ...cache, epoch: frame.epoch };
      } else {
        this.thumbs = cache;
      }
    }
    this.view.playing = frame.running;
    const values = parseStateString(frame.state);
    this.view.hiddenPanels = new Set(values.ui);

    this.win.history.replaceState(null, "", frame.state);

    updateControls(this.doc, values,
                   { onParam: (key, value) => void this.setParam(key, value) });
    updatePanelToggles(this.doc, this.view.hiddenPanels);
    this.renderAll(values);
    this.ensurePolling();
  }

  renderAll(values?: ControlValues): void {
    const frame = this.lastFrame;
    if (!frame) return;
    const controls = values ?? parseStateString(frame.state);
    renderDiagram(this.doc, frame, controls, this.thumbs, {
      onHover: (unit) => this.onHover(unit),
      onToggleFeature: (fid) => {
        const set = new Set(controls.feat);
        if (set.has(fid)) set.delete(fid);
        else set.add(fid);
        void this.setParam("feat", [...set].join(","));
      },
    });
    renderOutput(this.doc, frame, this.currentProjection());
    renderChart(this.doc, frame);

    const epochLabel = this.doc.getElementById("epoch-label");
    if (epochLabel) epochLabel.textContent = `Epoch ${frame.epoch}`;
    const playButton = this.doc.getElementById("btn-play");
    if (playButton) playButton.textContent = this.view.playing ? "⏸" : "▶";
  }

  private hasDetailFor(unit: string): boolean {
    return this.detail !== null && this.detail.grids[unit] !== undefined
      && this.lastFrame !== null && this.detail.epoch === this.lastFrame.epoch;
  }

  /** One thumbnail sweep plus one high-resolution sweep, skipping overlaps. */
  async refreshHeatmaps(): Promise<void> {
    await this.fetchFrame(THUMBNAIL_RESOLUTION);
    await this.fetchDetail();
  }

  async fetchDetail(): Promise<void> {
    await this.fetchFrame(DETAIL_RESOLUTION);
  }

  private async fetchFrame(resolution: number): Promise<void> {
    if (this.inFlightFrameRequest) return; // at most one in flight
    this.inFlightFrameRequest = true;
    try {
      await this.command({ cmd: "get_frame", heatmap_resolution: resolution });
    } finally {
      this.inFlightFrameRequest = false;
    }
  }

  private ensurePolling(): void {
    if (this.view.playing && this.pollTimer === null) {
      this.pollTimer = setInterval(() => void this.poll(), POLL_MS);
    } else if (!this.view.playing && this.pollTimer !== null) {
      clearInterval(this.pollTimer);
      this.pollTimer = null;
    }
  }

  private async poll(): Promise<void> {
    if (!this.view.playing) return;
    this.pollCount++;
    const wantDetail = this.pollCount % DETAIL_EVERY_N_POLLS === 0;
    await this.fetchFrame(wantDetail ? DETAIL_RESOLUTION : THUMBNAIL_RESOLUTION);
  }

  private notice(text: string | null): void {
    const el = this.doc.getElementById("notice");
    if (!el) return;
    if (text === null) {
      el.setAttribute("hidden", "");
      el.textContent = "";
    } else {
      el.removeAttribute("hidden");
      el.textContent = text;
    }
  }
}
