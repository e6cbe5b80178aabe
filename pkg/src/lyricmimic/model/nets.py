"""Encoder-decoder transformer over token ids."""

from __future__ import annotations

from dataclasses import dataclass, field

import torch
from torch import Tensor, nn

from .assembly import EncodedInput


@dataclass
class ModelConfig:
    layers: int = 2
    hidden_dim: int = 128
    heads: int = 4
    max_seq_len: int = 512
    vocab_size: int = 0
    ffn_dim: int | None = None
    dropout: float = 0.0

    def __post_init__(self):
        if self.hidden_dim % self.heads != 0:
            raise ValueError("hidden_dim must be divisible by heads")
        if self.max_seq_len < 16:
            raise ValueError("max_seq_len must be >= 16")
        if self.ffn_dim is None:
            self.ffn_dim = 4 * self.hidden_dim

    def to_dict(self) -> dict:
        return {
            "layers": self.layers,
            "hidden_dim": self.hidden_dim,
            "heads": self.heads,
            "max_seq_len": self.max_seq_len,
            "vocab_size": self.vocab_size,
            "ffn_dim": self.ffn_dim,
            "dropout": self.dropout,
        }

    @classmethod
    def from_dict(cls, data: dict) -> "ModelConfig":
        return cls(**data)


# Reference deployment scale; not used by the desk-scale test suite.
REFERENCE_CONFIG = dict(layers=16, hidden_dim=1024, heads=16, max_seq_len=512)


class Seq2SeqModel(nn.Module):
    """Transformer encoder-decoder with learned positional embeddings.

    The encoder maps the control/lyrics input to a latent sequence; the
    decoder predicts the next target token from that latent plus the
    generated prefix. Forward passes are deterministic in eval mode for
    fixed parameters and inputs.
    """

    def __init__(self, config: ModelConfig):
        super().__init__()
        if config.vocab_size <= 0:
            raise ValueError("vocab_size must be set")
        self.config = config
        d = config.hidden_dim
        self.tok_emb = nn.Embedding(config.vocab_size, d)
        self.pos_emb = nn.Embedding(config.max_seq_len, d)
        self.transformer = nn.Transformer(
            d_model=d,
            nhead=config.heads,
            num_encoder_layers=config.layers,
            num_decoder_layers=config.layers,
            dim_feedforward=config.ffn_dim,
            dropout=config.dropout,
            activation="gelu",
            batch_first=True,
            norm_first=True,
        )
        self.out_proj = nn.Linear(d, config.vocab_size)

    def _embed(self, ids: Tensor) -> Tensor:
        positions = torch.arange(ids.shape[1], device=ids.device)
        return self.tok_emb(ids) + self.pos_emb(positions)[None, :, :]

    def forward(
        self,
        src: Tensor,
        tgt_in: Tensor,
        src_pad_mask: Tensor | None = None,
        tgt_pad_mask: Tensor | None = None,
    ) -> Tensor:
        """Logits for each target position, shape [B, T, vocab]."""
        t = tgt_in.shape[1]
        causal = nn.Transformer.generate_square_subsequent_mask(t, device=tgt_in.device)
        hidden = self.transformer(
            self._embed(src),
            self._embed(tgt_in),
            tgt_mask=causal,
            src_key_padding_mask=src_pad_mask,
            tgt_key_padding_mask=tgt_pad_mask,
            memory_key_padding_mask=src_pad_mask,
        )
        return self.out_proj(hidden)


def forward_logits(
    model: Seq2SeqModel, encoded: EncodedInput, prefix: list[int], bos_id: int
) -> Tensor:
    """Next-token logit vector for a generation prefix (eval mode)."""
    if len(prefix) + 1 > model.config.max_seq_len:
        raise ValueError(
            f"prefix of {len(prefix)} tokens exceeds max_seq_len {model.config.max_seq_len}"
        )
    model.eval()
    with torch.no_grad():
        src = torch.tensor([encoded.token_ids], dtype=torch.long)
        tgt_in = torch.tensor([[bos_id] + list(prefix)], dtype=torch.long)
        logits = model(src, tgt_in)
    return logits[0, -1, :]
