"""Named scenario presets, shipped as ordinary state strings.

Each preset is a teaching scenario: a clean single-layer fit on the ring
data, a heavily featurized attempt at the spirals, an oversized network
with redundant capacity, and a maxed-out learning rate that fails to
converge.  They are plain state strings, so they can be pasted anywhere a
``--state`` flag or URL fragment is accepted.
"""

PRESETS = {
    # Ring data, one small tanh layer: converges cleanly.
    "fig1": "#problem=class&ds=circle&noise=0&split=50&bs=10&lr=0.03"
            "&act=tanh&reg=none&rr=0&layers=4&feat=x1,x2&seed=42&ui=",
    # Spiral data with every feature enabled and extra capacity.
    "fig2": "#problem=class&ds=spiral&noise=0&split=50&bs=10&lr=0.03"
            "&act=tanh&reg=none&rr=0&layers=8,4"
            "&feat=x1,x2,x1sq,x2sq,x1x2,sinx1,sinx2&seed=42&ui=",
    # Redundant depth on trivially separable data.
    "fig3": "#problem=class&ds=gauss&noise=0&split=50&bs=10&lr=0.03"
            "&act=tanh&reg=none&rr=0&layers=8,8,8,8&feat=x1,x2&seed=42&ui=",
    # Learning rate at the maximum: training thrashes instead of converging.
    "fig4": "#problem=class&ds=circle&noise=0&split=50&bs=10&lr=10"
            "&act=tanh&reg=none&rr=0&layers=8&feat=x1,x2&seed=42&ui=",
}
