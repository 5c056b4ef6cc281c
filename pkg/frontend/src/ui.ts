// DOM rendering and the little beeper.  All lookups are by element id;
// index.html defines the skeleton.

import type { SessionModel } from "./state.js";

const FACE_GLYPHS: Record<string, string> = {
  Angry: ">x.x<",
  Alert: "O.O",
  Excited: "^o^",
  Upset: ";_;",
  Neutral: "-.-",
  Happy: "^.^",
  Sad: "T_T",
  Sleepy: "=.=",
  Content: "~.~",
};

const BUBBLE_GLYPHS: Record<string, string> = {
  Hand: "a petting hand",
  Sleeping: "a sleep bubble",
  Chat: "a chat bubble",
  Bowl: "a food bowl",
  Heart: "a heart",
};

// One short beep per cue, distinguishable by pitch.
const CUE_FREQS: Record<string, number> = {
  cue1: 880, cue2: 220, cue3: 660, cue4: 330, cue5: 440,
};

let audio: AudioContext | null = null;
let lastSoundKey = "";

export function playCue(cue: string, key: string): void {
  // A directive repeats in renders; only beep once per distinct directive.
  if (key === lastSoundKey || !(cue in CUE_FREQS)) return;
  lastSoundKey = key;
  try {
    audio = audio ?? new AudioContext();
    const osc = audio.createOscillator();
    const gain = audio.createGain();
    osc.frequency.value = CUE_FREQS[cue];
    gain.gain.setValueAtTime(0.08, audio.currentTime);
    gain.gain.exponentialRampToValueAtTime(0.001, audio.currentTime + 0.25);
    osc.connect(gain).connect(audio.destination);
    osc.start();
    osc.stop(audio.currentTime + 0.25);
  } catch {
    // No audio available (autoplay policy, headless); the face still works.
  }
}

function el(id: string): HTMLElement {
  const found = document.getElementById(id);
  if (!found) throw new Error(`missing element #${id}`);
  return found;
}

export function render(model: SessionModel): void {
  el("face").textContent = FACE_GLYPHS[model.face] ?? model.face;
  el("face-label").textContent = model.face;
  el("status").textContent = model.connected ? "connected" : "connecting...";

  const robot = el("robot");
  if (model.aura) {
    const hue = Math.round(model.aura.hue);
    const blur = 20 + 60 * model.aura.intensity;
    robot.style.boxShadow = `0 0 ${blur}px hsl(${hue} 90% 55%)`;
  } else {
    robot.style.boxShadow = "none";
  }

  el("bubble").textContent = model.bubble
    ? `asks for: ${BUBBLE_GLYPHS[model.bubble] ?? model.bubble}`
    : "";
  el("ack").textContent = model.lastAck ? `felt: ${model.lastAck}` : "";
  el("error").textContent = model.lastError ?? "";

  if (model.sound) {
    playCue(model.sound, `${model.sound}@${model.directiveCount}`);
  }

  if (model.state) {
    for (const need of ["touch", "rest", "social", "hunger"] as const) {
      const value = model.state.needs[need];
      const bar = el(`meter-${need}`);
      bar.style.width = `${(value * 100).toFixed(1)}%`;
      bar.style.background = value < 0.1 ? "#c33" : value < 0.3 ? "#c93" : "#3a6";
      el(`meter-${need}-value`).textContent = value.toFixed(3);
    }
    const t = model.state.temperament;
    el("temperament").textContent =
      `${t.archetype} (${t.valence.toFixed(2)}, ${t.arousal.toFixed(2)})`;
    el("clock").textContent =
      `day ${model.state.clock.day}, ${(model.state.clock.t_ms / 1000).toFixed(0)} s`;
  }
}
