"""Dense feed-forward network as an explicit node/link graph.

Scalar, dependency-free implementation sized for interactive toy networks
(at most 6 hidden layers of 8 units).  Forward propagation, backprop of the
squared-error loss, and mini-batch SGD updates with optional L1/L2
regularization all run on the same graph, so every weight, gradient
accumulator, and activation is individually addressable by the
visualization layer.

Node input sums use ``math.fsum``, which returns the exactly rounded sum
regardless of term order.  That makes forward output bit-identical under
permutation of a hidden layer's units, a property the tests assert.
"""

import math

from .rng import Rng

MAX_HIDDEN_LAYERS = 6
MAX_LAYER_UNITS = 8

ACTIVATION_KINDS = ("tanh", "relu", "sigmoid", "linear")

OUTPUT_NODE_ID = "out"


def unit_sum(terms) -> float:
    """Exactly rounded, order-independent sum of a node's input terms."""
    try:
        return math.fsum(terms)
    except (OverflowError, ValueError):
        # fsum refuses mixed infinities / overflowing partials; fall back to
        # IEEE semantics so diverged runs keep stepping instead of crashing.
        total = 0.0
        for t in terms:
            total += t
        return total


class Activation:
    """Elementwise nonlinearity with its derivative.

    Derivatives are expressed in terms of the cached output value, which is
    exact for all four kinds (ReLU's kink derivative is defined as 0).
    """

    __slots__ = ("kind",)

    def __init__(self, kind: str):
        if kind not in ACTIVATION_KINDS:
            raise ValueError(f"unknown activation {kind!r}")
        self.kind = kind

    def value(self, x: float) -> float:
        kind = self.kind
        if kind == "tanh":
            return math.tanh(x)
        if kind == "relu":
            return x if x > 0.0 else 0.0
        if kind == "sigmoid":
            # branch keeps exp() in the non-overflowing regime
            if x >= 0.0:
                return 1.0 / (1.0 + math.exp(-x))
            e = math.exp(x)
            return e / (1.0 + e)
        return x

    def derivative(self, output: float) -> float:
        kind = self.kind
        if kind == "tanh":
            return 1.0 - output * output
        if kind == "relu":
            return 1.0 if output > 0.0 else 0.0
        if kind == "sigmoid":
            return output * (1.0 - output)
        return 1.0

    def __eq__(self, other):
        return isinstance(other, Activation) and other.kind == self.kind

    def __repr__(self):
        return f"Activation({self.kind!r})"


class Node:
    """One unit: bias, incoming links, and cached forward/backward values."""

    __slots__ = (
        "id",
        "bias",
        "input_links",
        "output_links",
        "output",
        "input_sum",
        "bias_grad",
        "grad_count",
        "output_der",
        "input_der",
    )

    def __init__(self, node_id: str, bias: float = 0.0):
        self.id = node_id
        self.bias = bias
        self.input_links: list[Link] = []
        self.output_links: list[Link] = []
        self.output = 0.0
        self.input_sum = 0.0
        self.bias_grad = 0.0
        self.grad_count = 0
        self.output_der = 0.0
        self.input_der = 0.0


class Link:
    """Weighted connection between two nodes with its gradient accumulator."""

    __slots__ = ("source", "dest", "weight", "accumulated_gradient", "batch_count")

    def __init__(self, source: Node, dest: Node, weight: float):
        self.source = source
        self.dest = dest
        self.weight = weight
        self.accumulated_gradient = 0.0
        self.batch_count = 0


class Network:
    """Layered, fully connected graph.

    ``layers[0]`` holds one node per enabled input feature (node ids are the
    feature ids), the last layer holds the single output node.  Hidden node
    ids are ``h<layer>_<unit>`` with both indices 1-based.
    """

    def __init__(self, layers, hidden_activation: Activation,
                 output_activation: Activation, problem: str):
        self.layers = layers
        self.hidden_activation = hidden_activation
        self.output_activation = output_activation
        self.problem = problem
        self._nodes_by_id = {}
        for layer in layers:
            for node in layer:
                if node.id in self._nodes_by_id:
                    raise ValueError(f"duplicate node id {node.id!r}")
                self._nodes_by_id[node.id] = node

    # -- introspection ----------------------------------------------------

    @property
    def feature_ids(self) -> list[str]:
        return [node.id for node in self.layers[0]]

    def node(self, node_id: str) -> Node:
        try:
            return self._nodes_by_id[node_id]
        except KeyError:
            raise KeyError(f"unknown unit id {node_id!r}") from None

    def has_node(self, node_id: str) -> bool:
        return node_id in self._nodes_by_id

    def unit_ids(self) -> list[str]:
        """All node ids in build order (inputs, hidden layers, output)."""
        return [node.id for layer in self.layers for node in layer]

    def links(self) -> list[Link]:
        """All links in deterministic build order: layer by layer,
        destination node by node, input links in source order."""
        out = []
        for layer in self.layers[1:]:
            for node in layer:
                out.extend(node.input_links)
        return out

    def weights(self) -> list[float]:
        return [link.weight for link in self.links()]

    def trainable_nodes(self) -> list[Node]:
        """Hidden and output nodes in build order (input nodes carry no
        usable bias)."""
        return [node for layer in self.layers[1:] for node in layer]

    def biases(self) -> list[float]:
        return [node.bias for node in self.trainable_nodes()]

    def activation_for_layer(self, layer_index: int) -> Activation:
        if layer_index == len(self.layers) - 1:
            return self.output_activation
        return self.hidden_activation

    # -- training ----------------------------------------------------------

    def forward(self, feature_values) -> float:
        """Propagate one sample; returns the output node's activation.

        Mutates only the per-node activation caches, never weights.
        """
        inputs = self.layers[0]
        if len(feature_values) != len(inputs):
            raise ValueError(
                f"expected {len(inputs)} feature values, got {len(feature_values)}")
        for node, value in zip(inputs, feature_values):
            node.input_sum = value
            node.output = value
        for index in range(1, len(self.layers)):
            act = self.activation_for_layer(index)
            for node in self.layers[index]:
                node.input_sum = unit_sum(
                    [node.bias]
                    + [link.weight * link.source.output for link in node.input_links])
                node.output = act.value(node.input_sum)
        return self.layers[-1][0].output

    def backward(self, target: float) -> None:
        """Accumulate gradients of 0.5*(output - target)**2 for the sample
        most recently passed through :meth:`forward`."""
        output_node = self.layers[-1][0]
        output_node.output_der = output_node.output - target
        for index in range(len(self.layers) - 1, 0, -1):
            act = self.activation_for_layer(index)
            for node in self.layers[index]:
                node.input_der = node.output_der * act.derivative(node.output)
                node.bias_grad += node.input_der
                node.grad_count += 1
                for link in node.input_links:
                    link.accumulated_gradient += node.input_der * link.source.output
                    link.batch_count += 1
            if index > 1:
                for node in self.layers[index - 1]:
                    node.output_der = sum(
                        link.weight * link.dest.input_der for link in node.output_links)

    def apply_update(self, learning_rate: float, reg: str, reg_rate: float) -> None:
        """One SGD step from the accumulated batch gradients.

        Gradients are averaged over the batch, so learning-rate semantics do
        not depend on batch size.  Regularization touches weights only; L1
        is a proximal shrink that lands exactly on 0.0 when the penalty
        crosses zero.  Links with an empty accumulator are left alone.
        All accumulators reset afterwards.
        """
        if reg not in ("none", "l1", "l2"):
            raise ValueError(f"unknown regularization {reg!r}")
        for link in self.links():
            if link.batch_count == 0:
                continue
            gradient = link.accumulated_gradient / link.batch_count
            w = link.weight - learning_rate * gradient
            if reg == "l2":
                w = w - learning_rate * reg_rate * w
            elif reg == "l1":
                shrink = learning_rate * reg_rate
                if w > 0.0:
                    w = max(0.0, w - shrink)
                elif w < 0.0:
                    w = -max(0.0, -w - shrink)
            link.weight = w
            link.accumulated_gradient = 0.0
            link.batch_count = 0
        for node in self.trainable_nodes():
            if node.grad_count == 0:
                continue
            node.bias -= learning_rate * (node.bias_grad / node.grad_count)
            node.bias_grad = 0.0
            node.grad_count = 0


def build_network(hidden_layer_sizes, enabled_features, hidden_activation: Activation,
                  problem: str, rng: Rng) -> Network:
    """Construct and initialize a fully connected network.

    Weights are drawn uniform(-0.5, 0.5), one draw per link, in build order
    (layer by layer, destination node by node, input links in source order);
    biases start at 0.1.  Output activation is tanh for classification and
    identity for regression.
    """
    if not enabled_features:
        raise ValueError("at least one input feature must be enabled")
    if len(hidden_layer_sizes) > MAX_HIDDEN_LAYERS:
        raise ValueError(
            f"at most {MAX_HIDDEN_LAYERS} hidden layers, got {len(hidden_layer_sizes)}")
    for size in hidden_layer_sizes:
        if not 1 <= size <= MAX_LAYER_UNITS:
            raise ValueError(
                f"hidden layer size {size} outside [1, {MAX_LAYER_UNITS}]")
    if problem not in ("classification", "regression"):
        raise ValueError(f"unknown problem kind {problem!r}")

    layers = [[Node(fid) for fid in enabled_features]]
    for depth, size in enumerate(hidden_layer_sizes, start=1):
        layers.append([Node(f"h{depth}_{unit}", bias=0.1) for unit in range(1, size + 1)])
    layers.append([Node(OUTPUT_NODE_ID, bias=0.1)])

    for index in range(1, len(layers)):
        for node in layers[index]:
            for source in layers[index - 1]:
                link = Link(source, node, rng.uniform(-0.5, 0.5))
                node.input_links.append(link)
                source.output_links.append(link)

    output_activation = Activation("tanh" if problem == "classification" else "linear")
    return Network(layers, hidden_activation, output_activation, problem)
